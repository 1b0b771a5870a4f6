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


// Acceptance gate. Prints one PASS or FAIL line per criterion and exits
// non-zero if any criterion fails. All comparisons are exact; the only
// tolerances are the wall-clock budgets given with criteria 1 and 2.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "latmat/catalog.h"
#include "latmat/constructions.h"
#include "latmat/corpus.h"
#include "latmat/flats.h"
#include "latmat/io.h"
#include "latmat/lpm.h"
#include "latmat/minors.h"

namespace latmat {
namespace {

constexpr double kCatalogBudgetSeconds = 600;
constexpr double kTheoremBudgetSeconds = 1800;
constexpr int kPresentationSamples = 1000;
constexpr const char* kBaseCorpus =
    "catalog-minors,random-transversal,lpm-random,count=500,max-n=8,seed=2026";
constexpr const char* kFullCorpus =
    "catalog-minors,random-transversal,lpm-random,duals-closure,count=500,max-n=8,seed=2026";

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::vector<ElementSet> sorted(std::vector<ElementSet> s) {
  std::sort(s.begin(), s.end());
  return s;
}

std::vector<ElementSet> complements(const Matroid& m, const std::vector<ElementSet>& s) {
  std::vector<ElementSet> out;
  for (ElementSet x : s) out.push_back(m.ground() - x);
  return sorted(out);
}

std::string theorem_run(const char* spec_text, TheoremReport* out = nullptr) {
  const CorpusSpec spec = CorpusSpec::parse(spec_text);
  TheoremReport report = theorem_check(generate(spec));
  report.corpus_spec = spec.to_string();
  const std::string json = theorem_json(report);
  if (out) *out = std::move(report);
  return json;
}

Outcome catalog_minimality() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const std::vector<std::string> expected = {"A3", "B2,2", "C4,2", "W3",   "Whirl3", "R3",
                                             "R4", "A4",   "B3,2", "C5,2", "D4",     "E4"};
  const std::vector<CatalogEntry> catalog = catalog_up_to(8);
  std::vector<std::string> names;
  for (const CatalogEntry& e : catalog) {
    names.push_back(e.name);
    o.require(verify_excluded_minor(e.matroid).is_excluded_minor, e.name + " is not minimal");
  }
  o.require(names == expected, "catalog list differs");
  const double elapsed = seconds_since(start);
  o.require(elapsed < kCatalogBudgetSeconds, "over the time budget");
  if (o.pass) {
    o.detail = std::to_string(catalog.size()) + " members, " + std::to_string(elapsed) + " s";
  }
  return o;
}

Outcome theorem_equivalence(std::string* json) {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const std::size_t minors = catalog_minors(8).size();
  const std::size_t base = generate(CorpusSpec::parse(kBaseCorpus)).size();
  o.require(base == minors + 1000, "random generators fell short of 500 members each");
  TheoremReport report;
  *json = theorem_run(kFullCorpus, &report);
  o.require(report.total > base, "duals added nothing");
  o.require(report.by_size.rbegin()->first <= 8, "member above 8 elements");
  o.require(report.disagreements.empty(),
            std::to_string(report.disagreements.size()) + " disagreements");
  const double elapsed = seconds_since(start);
  o.require(elapsed < kTheoremBudgetSeconds, "over the time budget");
  if (o.pass) {
    o.detail = std::to_string(report.total) + " members (" + std::to_string(minors) +
               " catalog minors), 0 disagreements, " + std::to_string(elapsed) + " s";
  }
  return o;
}

Outcome exact_counts() {
  Outcome o;
  o.require(wheel3().basis_count() == 16, "wheel3");
  o.require(whirl3().basis_count() == 17, "whirl3");
  o.require(p_n(3).basis_count() == 18, "p_n(3)");
  o.require(p_prime_n(3).basis_count() == 8, "p_prime_n(3)");
  o.require(b_nk(2, 2).basis_count() == 12, "b_nk(2,2)");
  if (o.pass) o.detail = "16 17 18 8 12";
  return o;
}

Outcome construction_equivalences() {
  Outcome o;
  for (int n = 3; n <= 5; ++n) {
    o.require(is_isomorphic(p_prime_n(n), free_coextension(p_n(n - 1))).has_value(),
              "P'_" + std::to_string(n) + " constructions differ");
  }
  for (int n = 3; n <= 4; ++n) {
    o.require(is_isomorphic(a_n(n), dual(a_n(n))).has_value(),
              "A" + std::to_string(n) + " not self-dual");
  }
  const Matroid e4 = e_n(4);
  std::vector<ElementSet> pairs;
  for (ElementSet c : circuits(e4)) {
    if (c.size() == 2) pairs.push_back(c);
  }
  o.require(pairs.size() == 1, "E4 should have one 2-circuit");
  if (pairs.size() == 1) {
    bool found = false;
    for (int x : pairs[0]) {
      found = found || is_isomorphic(deletion(e4, {x}).matroid, p_prime_n(4)).has_value();
    }
    o.require(found, "E4 minus its 2-circuit element is not P'_4");
  }
  for (auto [n, k] : {std::pair{2, 2}, {3, 2}, {3, 3}, {4, 2}}) {
    const Matroid c = c_nk(n, k);
    const ElementSet x = ElementSet::first(n);
    const ElementSet y = ElementSet::first(2 * n) - x;
    const ElementSet z = c.ground() - x - y;
    std::vector<ElementSet> dependent;
    for (ElementSet h : hyperplanes(c)) {
      if (!c.is_independent(h)) dependent.push_back(h);
    }
    o.require(sorted(dependent) == sorted({x | y, x | z, y | z}),
              "C hyperplanes for n=" + std::to_string(n) + " k=" + std::to_string(k));
  }
  if (o.pass) o.detail = "P'_3..5, A3, A4, E4, C_{n+k,k} for four (n,k)";
  return o;
}

Outcome presentation_algebra() {
  Outcome o;
  Rng rng(2026);
  int contractions = 0, deletions = 0, connected = 0;
  for (int t = 0; t < kPresentationSamples; ++t) {
    const IntervalPresentation p = random_presentation(rng, 9);
    const Matroid m = realize(p);
    const ElementSet loops = m.loops();
    for (int y = 0; y < p.size(); ++y) {
      if (loops.contains(y)) continue;
      ++contractions;
      o.require(realize(contract_presentation(p, y)) == contraction(m, {y}).matroid,
                "contraction mismatch");
    }
    for (Terminal end : {Terminal::kFirst, Terminal::kLast}) {
      const int e = p.element_at(end == Terminal::kFirst ? 0 : p.size() - 1);
      if (loops.contains(e)) continue;
      ++deletions;
      o.require(realize(delete_terminal_presentation(p, end)) == deletion(m, {e}).matroid,
                "deletion mismatch");
    }
    const bool is_conn = is_connected(m);
    o.require(presentation_connected(p) == is_conn, "connectivity mismatch");
    if (is_conn && p.rank() > 0) {
      ++connected;
      std::vector<ElementSet> flats;
      for (const auto& [flat, rank] : fundamental_flats_from_presentation(p)) {
        flats.push_back(flat);
      }
      o.require(sorted(flats) == fundamental_flats(m), "fundamental flats mismatch");
    }
  }
  if (o.pass) {
    o.detail = std::to_string(kPresentationSamples) + " presentations, " +
               std::to_string(contractions) + " contractions, " + std::to_string(deletions) +
               " deletions, " + std::to_string(connected) + " connected";
  }
  return o;
}

Outcome duality_suite(const std::vector<Matroid>& corpus) {
  Outcome o;
  int connected_lpms = 0;
  for (const Matroid& m : corpus) {
    const Matroid d = dual(m);
    o.require(cyclic_flats(d) == complements(m, cyclic_flats(m)), "cyclic flats");
    if (m.size() >= 2 && is_connected(m) && find_path_order(m)) {
      ++connected_lpms;
      o.require(fundamental_flats(d) == complements(m, fundamental_flats(m)),
                "fundamental flats");
    }
  }
  if (o.pass) {
    o.detail = std::to_string(corpus.size()) + " members, " + std::to_string(connected_lpms) +
               " connected lattice path matroids";
  }
  return o;
}

Outcome nested_cross_check(const std::vector<Matroid>& corpus) {
  Outcome o;
  int nested = 0;
  for (const Matroid& m : corpus) {
    const bool a = is_nested(m);
    nested += a;
    o.require(a == is_nested_via_pn(m), "mismatch");
  }
  if (o.pass) {
    o.detail = std::to_string(corpus.size()) + " members, " + std::to_string(nested) + " nested";
  }
  return o;
}

Outcome negative_validation() {
  Outcome o;
  const std::vector<std::pair<int, std::vector<ElementSet>>> families = {
      {4, {{0, 1}, {2, 3}}},
      {4, {{0, 1}, {1, 2}, {2, 3}}},
      {6, {{0, 1, 2}, {3, 4, 5}}},
  };
  for (const auto& [n, bases] : families) {
    try {
      Matroid::from_bases(n, bases);
      o.require(false, "accepted a non-matroid");
    } catch (const AxiomViolation& v) {
      // The reported exchange must really fail.
      bool genuine = v.first().contains(v.removed()) && !v.second().contains(v.removed());
      for (int y : v.second() - v.first()) {
        const ElementSet swapped = v.first().without(v.removed()).with(y);
        genuine = genuine && std::find(bases.begin(), bases.end(), swapped) == bases.end();
      }
      o.require(genuine, "witness does not fail the exchange");
    }
  }
  if (o.pass) o.detail = "3 families rejected with checked witnesses";
  return o;
}

Outcome reproducibility(const std::string& first) {
  Outcome o;
  o.require(!first.empty() && theorem_run(kFullCorpus) == first, "reports differ");
  if (o.pass) o.detail = std::to_string(first.size()) + " bytes identical";
  return o;
}

}  // namespace
}  // namespace latmat

int main() {
  using namespace latmat;
  int failures = 0;
  auto report = [&](int id, const char* title, const std::function<Outcome()>& run) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::printf("%s [%d] %s: %s\n", o.pass ? "PASS" : "FAIL", id, title, o.detail.c_str());
    std::fflush(stdout);
  };

  std::string json;
  const std::vector<Matroid> corpus = generate(CorpusSpec::parse(kFullCorpus));
  report(1, "catalog minimality", catalog_minimality);
  report(2, "three recognizers agree", [&] { return theorem_equivalence(&json); });
  report(3, "basis counts", exact_counts);
  report(4, "construction equivalences", construction_equivalences);
  report(5, "presentation algebra", presentation_algebra);
  report(6, "duality of cyclic and fundamental flats", [&] { return duality_suite(corpus); });
  report(7, "nested matroids two ways", [&] { return nested_cross_check(corpus); });
  report(8, "non-matroids rejected", negative_validation);
  report(9, "reproducible reports", [&] { return reproducibility(json); });
  return failures == 0 ? 0 : 1;
}
