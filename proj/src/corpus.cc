// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "latmat/corpus.h"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "latmat/catalog.h"
#include "latmat/constructions.h"
#include "latmat/isomorphism.h"

namespace latmat {

const char* generator_name(Generator g) {
  switch (g) {
    case Generator::kRandomTransversal: return "random-transversal";
    case Generator::kRandomSparsePaving: return "random-sparse-paving";
    case Generator::kCatalogMinors: return "catalog-minors";
    case Generator::kLpmRandom: return "lpm-random";
    case Generator::kDualsClosure: return "duals-closure";
  }
  return "?";
}

namespace {

constexpr Generator kAllGenerators[] = {
    Generator::kRandomTransversal, Generator::kRandomSparsePaving, Generator::kCatalogMinors,
    Generator::kLpmRandom, Generator::kDualsClosure};

[[noreturn]] void bad_spec(const std::string& why) { throw Error(ErrorCode::kBadSpec, why); }

std::uint64_t parse_number(const std::string& key, const std::string& value) {
  if (value.empty() || !std::all_of(value.begin(), value.end(), ::isdigit)) {
    bad_spec("'" + key + "' needs a non-negative integer, got '" + value + "'");
  }
  try {
    return std::stoull(value);
  } catch (const std::exception&) {
    bad_spec("'" + key + "' is out of range");
  }
}

bool is_random(Generator g) {
  return g == Generator::kRandomTransversal || g == Generator::kRandomSparsePaving ||
         g == Generator::kLpmRandom;
}

// Uniform random k-subset of {0, ..., n-1}.
ElementSet random_subset(Rng& rng, int n, int k) {
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  ElementSet out;
  for (int i = 0; i < k; ++i) {
    const int j = rng.between(i, n - 1);
    std::swap(pool[i], pool[j]);
    out = out.with(pool[i]);
  }
  return out;
}

std::vector<int> random_permutation(Rng& rng, int n) {
  std::vector<int> out(n);
  std::iota(out.begin(), out.end(), 0);
  for (int i = n - 1; i > 0; --i) std::swap(out[i], out[rng.between(0, i)]);
  return out;
}

Matroid random_transversal(Rng& rng, int max_n) {
  const int n = rng.between(1, max_n);
  const int count = rng.between(1, n);
  std::vector<ElementSet> sets;
  for (int i = 0; i < count; ++i) {
    ElementSet s;
    for (int e = 0; e < n; ++e) {
      if (rng.coin()) s = s.with(e);
    }
    if (s.empty()) s = s.with(rng.between(0, n - 1));
    sets.push_back(s);
  }
  return transversal_matroid(n, sets);
}

Matroid random_sparse_paving(Rng& rng, int max_n) {
  const int n = rng.between(2, std::max(2, max_n));
  const int r = rng.between(1, n - 1);
  const int attempts = rng.between(0, 2 * n);
  std::vector<ElementSet> chosen;
  for (int t = 0; t < attempts; ++t) {
    const ElementSet x = random_subset(rng, n, r);
    bool compatible = true;
    for (ElementSet y : chosen) compatible = compatible && (x & y).size() <= r - 2;
    if (compatible) chosen.push_back(x);
  }
  std::vector<ElementSet> bases;
  for (ElementSet x : subsets_of_size(ElementSet::first(n), r)) {
    if (std::find(chosen.begin(), chosen.end(), x) == chosen.end()) bases.push_back(x);
  }
  return Matroid::from_bases(n, std::move(bases));
}

// Collects members in order, skipping isomorphic repeats.
class Collector {
 public:
  bool add(Matroid m) {
    if (!seen_.insert(canonical_form(m)).second) return false;
    members_.push_back(std::move(m));
    return true;
  }
  const std::vector<Matroid>& members() const { return members_; }
  std::vector<Matroid> take() { return std::move(members_); }

 private:
  std::set<std::string> seen_;
  std::vector<Matroid> members_;
};

}  // namespace

std::uint64_t Rng::below(std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  while (true) {
    const std::uint64_t x = engine_();
    if (x >= threshold) return x % bound;
  }
}

CorpusSpec CorpusSpec::parse(const std::string& text) {
  CorpusSpec spec;
  std::stringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    if (token.empty()) continue;
    const auto eq = token.find('=');
    if (eq != std::string::npos) {
      const std::string key = token.substr(0, eq);
      const std::string value = token.substr(eq + 1);
      if (key == "count") {
        spec.count = static_cast<int>(parse_number(key, value));
      } else if (key == "max-n") {
        spec.max_n = static_cast<int>(parse_number(key, value));
      } else if (key == "seed") {
        spec.seed = parse_number(key, value);
      } else {
        bad_spec("unknown key '" + key + "'");
      }
      continue;
    }
    bool known = false;
    for (Generator g : kAllGenerators) {
      if (token == generator_name(g)) {
        if (std::find(spec.generators.begin(), spec.generators.end(), g) ==
            spec.generators.end()) {
          spec.generators.push_back(g);
        }
        known = true;
      }
    }
    if (!known) bad_spec("unknown generator '" + token + "'");
  }
  if (spec.generators.empty()) bad_spec("no generators named");
  if (spec.max_n < 1 || spec.max_n > kMaxElements) bad_spec("max-n must be in 1..12");
  return spec;
}

std::string CorpusSpec::to_string() const {
  std::string out;
  for (Generator g : generators) {
    out += generator_name(g);
    out += ',';
  }
  out += "count=" + std::to_string(count) + ",max-n=" + std::to_string(max_n);
  if (seed) out += ",seed=" + std::to_string(*seed);
  return out;
}

bool CorpusSpec::needs_seed() const {
  return std::any_of(generators.begin(), generators.end(), is_random);
}

Matroid transversal_matroid(int n, const std::vector<ElementSet>& sets) {
  const int m = static_cast<int>(sets.size());
  // Kuhn's algorithm: elements of x on the left, sets on the right.
  auto matchable = [&](ElementSet x) {
    std::vector<int> owner(m, -1);
    for (int e : x) {
      std::vector<bool> visited(m, false);
      auto augment = [&](auto& self, int v) -> bool {
        for (int s = 0; s < m; ++s) {
          if (!sets[s].contains(v) || visited[s]) continue;
          visited[s] = true;
          if (owner[s] < 0 || self(self, owner[s])) {
            owner[s] = v;
            return true;
          }
        }
        return false;
      };
      if (!augment(augment, e)) return false;
    }
    return true;
  };
  const ElementSet ground = ElementSet::first(n);
  for (int r = std::min(n, m); r >= 0; --r) {
    std::vector<ElementSet> bases;
    for (ElementSet x : subsets_of_size(ground, r)) {
      if (matchable(x)) bases.push_back(x);
    }
    if (!bases.empty()) return Matroid::from_trusted_bases(n, std::move(bases));
  }
  return Matroid::from_trusted_bases(n, {ElementSet()});
}

IntervalPresentation random_presentation(Rng& rng, int max_n) {
  const int n = rng.between(1, max_n);
  const int r = rng.between(0, n);
  while (true) {
    const std::vector<int> lo = random_subset(rng, n, r).elements();
    const std::vector<int> hi = random_subset(rng, n, r).elements();
    bool valid = true;
    for (int i = 0; i < r; ++i) valid = valid && lo[i] <= hi[i];
    if (!valid) continue;
    std::vector<Interval> intervals;
    for (int i = 0; i < r; ++i) intervals.push_back({lo[i], hi[i]});
    return IntervalPresentation::create(n, std::move(intervals), random_permutation(rng, n));
  }
}

std::vector<Matroid> catalog_minors(int max_n) {
  Collector all;
  std::vector<Matroid> frontier;
  for (CatalogEntry& entry : catalog_up_to(8)) {
    if (all.add(entry.matroid)) frontier.push_back(entry.matroid);
  }
  while (!frontier.empty()) {
    std::vector<Matroid> next;
    for (const Matroid& m : frontier) {
      for (int e = 0; e < m.size(); ++e) {
        const ElementSet x = ElementSet::singleton(e);
        for (Matroid child : {deletion(m, x).matroid, contraction(m, x).matroid}) {
          if (all.add(child)) next.push_back(std::move(child));
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<Matroid> out;
  for (const Matroid& m : all.members()) {
    if (m.size() <= max_n) out.push_back(m);
  }
  return out;
}

std::vector<Matroid> with_duals(const std::vector<Matroid>& members) {
  Collector out;
  for (const Matroid& m : members) out.add(m);
  for (const Matroid& m : members) out.add(dual(m));
  return out.take();
}

std::vector<Matroid> generate(const CorpusSpec& spec) {
  if (spec.needs_seed() && !spec.seed) bad_spec("random generators need a seed");
  Collector corpus;
  bool duals = false;
  for (Generator g : spec.generators) {
    if (g == Generator::kDualsClosure) {
      duals = true;
      continue;
    }
    if (g == Generator::kCatalogMinors) {
      for (Matroid& m : catalog_minors(spec.max_n)) corpus.add(std::move(m));
      continue;
    }
    const auto index = static_cast<std::uint64_t>(g);
    Rng rng(*spec.seed + 0x9E3779B97F4A7C15ull * (index + 1));
    const long attempts = 200L * std::max(spec.count, 1);
    int added = 0;
    for (long t = 0; t < attempts && added < spec.count; ++t) {
      Matroid m = g == Generator::kRandomTransversal    ? random_transversal(rng, spec.max_n)
                  : g == Generator::kRandomSparsePaving ? random_sparse_paving(rng, spec.max_n)
                                                        : realize(random_presentation(rng, spec.max_n));
      added += corpus.add(std::move(m));
    }
  }
  return duals ? with_duals(corpus.members()) : corpus.take();
}

}  // namespace latmat
