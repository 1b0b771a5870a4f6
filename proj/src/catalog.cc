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

#include "latmat/catalog.h"

#include <algorithm>
#include <regex>
#include <set>

#include "latmat/constructions.h"
#include "latmat/isomorphism.h"
#include "latmat/lpm.h"

namespace latmat {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::kBadParameter, what);
}

Matroid sparse_paving(int n, int r, const std::vector<ElementSet>& circuit_hyperplanes) {
  std::vector<ElementSet> bases;
  for (ElementSet x : subsets_of_size(ElementSet::first(n), r)) {
    if (std::find(circuit_hyperplanes.begin(), circuit_hyperplanes.end(), x) ==
        circuit_hyperplanes.end()) {
      bases.push_back(x);
    }
  }
  return Matroid::from_trusted_bases(n, std::move(bases));
}

}  // namespace

Matroid p_n(int n) {
  require(n >= 2, "P_n needs n >= 2");
  const Matroid circuit = uniform(n - 1, n);
  return truncate(direct_sum(circuit, circuit), n);
}

Matroid p_prime_n(int n) {
  require(n >= 3, "P'_n needs n >= 3");
  const Matroid circuit = uniform(n - 1, n);
  return truncate(parallel_connection(circuit, n - 1, circuit, 0), n);
}

Matroid a_n(int n) {
  require(n >= 3, "A_n needs n >= 3");
  return free_extension(p_prime_n(n));
}

Matroid b_nk(int n, int k) {
  require(n >= k && k >= 2, "B_{n,k} needs n >= k >= 2");
  const Matroid circuit = uniform(n - 1, n);
  return truncate(direct_sum(direct_sum(circuit, circuit), uniform(k - 1, k)), n);
}

Matroid c_nk(int n, int k) { return dual(b_nk(n, k)); }

Matroid d_n(int n) {
  require(n >= 4, "D_n needs n >= 4");
  return free_extension(direct_sum(p_n(n - 1), uniform(1, 1)));
}

Matroid e_n(int n) { return dual(d_n(n)); }

Matroid wheel3() {
  return sparse_paving(6, 3, {{0, 1, 2}, {0, 3, 4}, {1, 4, 5}, {2, 3, 5}});
}

Matroid whirl3() { return relax(wheel3(), {0, 1, 2}); }

Matroid r4() {
  const Matroid simple = sparse_paving(6, 4, {{0, 1, 2, 3}, {2, 3, 4, 5}});
  return parallel_connection(simple, 2, uniform(1, 2), 0);
}

Matroid r3() { return dual(r4()); }

std::vector<CatalogEntry> catalog_up_to(int m) {
  require(m >= 6, "catalog bound must be at least 6");
  require(m <= kMaxElements, "catalog bound exceeds the ground-set cap");
  std::vector<CatalogEntry> all;
  for (int n = 3; 2 * n <= m; ++n) {
    all.push_back({Family::kA, {n}, a_n(n), "A" + std::to_string(n)});
  }
  for (int n = 2; 2 * n + 2 <= m; ++n) {
    for (int k = 2; k <= n && 2 * n + k <= m; ++k) {
      const std::string suffix = std::to_string(n + k) + "," + std::to_string(k);
      all.push_back({Family::kB, {n, k}, b_nk(n, k),
                     "B" + std::to_string(n) + "," + std::to_string(k)});
      all.push_back({Family::kC, {n + k, k}, c_nk(n, k), "C" + suffix});
    }
  }
  for (int n = 4; 2 * n <= m; ++n) {
    all.push_back({Family::kD, {n}, d_n(n), "D" + std::to_string(n)});
    all.push_back({Family::kE, {n}, e_n(n), "E" + std::to_string(n)});
  }
  all.push_back({Family::kW3, {}, wheel3(), "W3"});
  all.push_back({Family::kWhirl3, {}, whirl3(), "Whirl3"});
  if (m >= 7) {
    all.push_back({Family::kR3, {}, r3(), "R3"});
    all.push_back({Family::kR4, {}, r4(), "R4"});
  }
  std::stable_sort(all.begin(), all.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
    return a.matroid.size() < b.matroid.size();
  });
  std::vector<CatalogEntry> out;
  std::set<std::string> seen;
  for (CatalogEntry& entry : all) {
    if (seen.insert(canonical_form(entry.matroid)).second) out.push_back(std::move(entry));
  }
  return out;
}

CatalogEntry family_by_name(const std::string& name) {
  static const std::regex kOne(R"((A|D|E|P|Pprime)(\d+))");
  static const std::regex kTwo(R"((B|C|U)(\d+),(\d+))");
  std::smatch match;
  if (name == "W3") return {Family::kW3, {}, wheel3(), name};
  if (name == "Whirl3") return {Family::kWhirl3, {}, whirl3(), name};
  if (name == "R3") return {Family::kR3, {}, r3(), name};
  if (name == "R4") return {Family::kR4, {}, r4(), name};
  if (std::regex_match(name, match, kOne)) {
    const std::string family = match[1];
    const int n = std::stoi(match[2]);
    if (family == "A") return {Family::kA, {n}, a_n(n), name};
    if (family == "D") return {Family::kD, {n}, d_n(n), name};
    if (family == "E") return {Family::kE, {n}, e_n(n), name};
    if (family == "P") return {Family::kP, {n}, p_n(n), name};
    return {Family::kPprime, {n}, p_prime_n(n), name};
  }
  if (std::regex_match(name, match, kTwo)) {
    const std::string family = match[1];
    const int x = std::stoi(match[2]);
    const int y = std::stoi(match[3]);
    if (family == "B") return {Family::kB, {x, y}, b_nk(x, y), name};
    if (family == "C") {
      require(x > y, "C_{m,k} needs m > k");
      return {Family::kC, {x, y}, c_nk(x - y, y), name};
    }
    return {Family::kUniform, {x, y}, uniform(x, y), name};
  }
  throw Error(ErrorCode::kBadParameter, "unknown family '" + name + "'");
}

ExcludedMinorReport verify_excluded_minor(const Matroid& m) {
  const OracleOptions options;
  if (m.size() > options.max_elements) {
    throw Error(ErrorCode::kGroundTooLarge, "excluded-minor check is limited to 9 elements");
  }
  ExcludedMinorReport report;
  report.in_class = find_path_order(m, options).has_value();
  bool all_minors = true;
  for (int e = 0; e < m.size(); ++e) {
    for (bool contracted : {false, true}) {
      const ElementSet x = ElementSet::singleton(e);
      const Matroid minor_e = contracted ? contraction(m, x).matroid : deletion(m, x).matroid;
      const bool in_class = find_path_order(minor_e, options).has_value();
      all_minors = all_minors && in_class;
      report.minors.push_back({e, contracted, in_class});
    }
  }
  report.is_excluded_minor = !report.in_class && all_minors;
  return report;
}

}  // namespace latmat
