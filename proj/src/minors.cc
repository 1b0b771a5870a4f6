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

#include "latmat/minors.h"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "latmat/constructions.h"
#include "latmat/isomorphism.h"
#include "latmat/lpm.h"

namespace latmat {

namespace {

const std::vector<CatalogEntry>& cached_catalog(int m) {
  static std::mutex mutex;
  static std::map<int, std::vector<CatalogEntry>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(m);
  if (it == cache.end()) it = cache.emplace(m, catalog_up_to(m)).first;
  return it->second;
}

}  // namespace

std::optional<MinorWitness> has_minor(const Matroid& host, const Matroid& pattern,
                                      const std::string& pattern_name) {
  if (pattern.size() > host.size()) return std::nullopt;
  const int contract_count = host.rank() - pattern.rank();
  const int delete_count = (host.size() - host.rank()) - (pattern.size() - pattern.rank());
  if (contract_count < 0 || delete_count < 0) return std::nullopt;

  const std::string target = canonical_form(pattern);
  const ElementSet ground = host.ground();
  for (ElementSet con : subsets_of_size(ground, contract_count)) {
    if (!host.is_independent(con)) continue;
    for (ElementSet del : subsets_of_size(ground - con, delete_count)) {
      if (host.rank_of(ground - del) != host.rank()) continue;
      std::size_t count = 0;
      for (ElementSet b : host.bases()) {
        count += con.is_subset_of(b) && !b.intersects(del);
      }
      if (count != pattern.basis_count()) continue;
      const Relabeled candidate = minor(host, del, con);
      if (canonical_form(candidate.matroid) != target) continue;
      const std::optional<Permutation> iso = is_isomorphic(pattern, candidate.matroid);
      MinorWitness witness{pattern_name, del, con, {}};
      for (int e : *iso) witness.iso.push_back(candidate.labels[e]);
      return witness;
    }
  }
  return std::nullopt;
}

std::optional<MinorWitness> find_catalog_minor(const Matroid& m,
                                               const std::vector<CatalogEntry>& catalog) {
  for (const CatalogEntry& entry : catalog) {
    if (entry.matroid.size() > m.size()) continue;
    if (auto witness = has_minor(m, entry.matroid, entry.name)) return witness;
  }
  return std::nullopt;
}

std::optional<MinorWitness> find_catalog_minor(const Matroid& m) {
  if (m.size() < 6) return std::nullopt;
  return find_catalog_minor(m, cached_catalog(m.size()));
}

bool is_lpm_via_excluded_minors(const Matroid& m) { return !find_catalog_minor(m).has_value(); }

RecognitionResult recognize_with_excluded_minors(const Matroid& m) {
  RecognitionResult result;
  if (auto witness = find_catalog_minor(m)) {
    result.witness = std::move(*witness);
  } else {
    result.verdict = true;
  }
  return result;
}

TheoremReport theorem_check(const std::vector<Matroid>& corpus, int workers) {
  int largest = 6;
  for (const Matroid& m : corpus) largest = std::max(largest, m.size());
  const std::vector<CatalogEntry>& catalog = cached_catalog(largest);

  std::vector<TheoremVerdicts> verdicts(corpus.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < corpus.size(); i = next++) {
      const Matroid& m = corpus[i];
      verdicts[i].oracle = find_path_order(m).has_value();
      verdicts[i].characterization = is_lpm_char(m).verdict;
      verdicts[i].excluded_minors = !find_catalog_minor(m, catalog).has_value();
    }
  };
  std::vector<std::thread> threads;
  for (int t = 1; t < workers; ++t) threads.emplace_back(work);
  work();
  for (std::thread& t : threads) t.join();

  TheoremReport report;
  report.total = corpus.size();
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    ++report.by_size[corpus[i].size()];
    const TheoremVerdicts& v = verdicts[i];
    if (!v.agree()) {
      report.disagreements.push_back({i, corpus[i], v});
    } else if (v.oracle) {
      ++report.in_class;
    } else {
      ++report.not_in_class;
    }
  }
  return report;
}

}  // namespace latmat
