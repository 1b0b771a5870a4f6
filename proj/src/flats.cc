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

#include "latmat/flats.h"

#include <algorithm>

#include "latmat/constructions.h"

namespace latmat {

namespace {

bool is_pnc(const Matroid& m, ElementSet f) {
  return f != m.ground() && !m.is_independent(f) && is_connected_set(m, f);
}

bool incomparable(ElementSet a, ElementSet b) {
  return !a.is_subset_of(b) && !b.is_subset_of(a);
}

bool reducible_among(ElementSet f, const std::vector<ElementSet>& pnc) {
  for (std::size_t i = 0; i < pnc.size(); ++i) {
    for (std::size_t j = i + 1; j < pnc.size(); ++j) {
      if (incomparable(pnc[i], pnc[j]) && (pnc[i] & pnc[j]) == f) return true;
    }
  }
  return false;
}

bool fundamental_among(const Matroid& m, ElementSet f,
                       const std::vector<ElementSet>& spanning) {
  const int r = m.rank_of(f);
  for (ElementSet c : spanning) {
    // c is not contained in the proper flat f, so c & f is independent.
    if ((c & f).size() == r) return true;
  }
  return false;
}

}  // namespace

bool is_cyclic_set(const Matroid& m, ElementSet x) {
  const int r = m.rank_of(x);
  for (int e : x) {
    if (m.rank_of(x.without(e)) != r) return false;
  }
  return true;
}

std::vector<ElementSet> all_flats(const Matroid& m) {
  const Mask total = Mask{1} << m.size();
  std::vector<std::uint8_t> is_flat(total, 0);
  for (Mask bits = 0; bits < total; ++bits) is_flat[m.closure(ElementSet(bits)).bits()] = 1;
  std::vector<ElementSet> out;
  for (Mask bits = 0; bits < total; ++bits) {
    if (is_flat[bits]) out.emplace_back(bits);
  }
  return out;
}

std::vector<ElementSet> cyclic_flats(const Matroid& m) {
  std::vector<ElementSet> out;
  for (ElementSet f : all_flats(m)) {
    if (is_cyclic_set(m, f)) out.push_back(f);
  }
  return out;
}

std::vector<ElementSet> pnc_flats(const Matroid& m) {
  std::vector<ElementSet> out;
  for (ElementSet f : all_flats(m)) {
    if (is_pnc(m, f)) out.push_back(f);
  }
  return out;
}

bool is_reducible(const Matroid& m, ElementSet f) {
  if (!f.is_subset_of(m.ground()) || !m.is_flat(f) || !is_pnc(m, f)) {
    throw Error(ErrorCode::kNotPncFlat, f.to_string() + " is not a pnc-flat");
  }
  return reducible_among(f, pnc_flats(m));
}

std::vector<ElementSet> irreducible_pnc_flats(const Matroid& m) {
  const std::vector<ElementSet> pnc = pnc_flats(m);
  std::vector<ElementSet> out;
  for (ElementSet f : pnc) {
    if (!reducible_among(f, pnc)) out.push_back(f);
  }
  return out;
}

std::vector<ElementSet> fundamental_flats(const Matroid& m) {
  const std::vector<ElementSet> spanning = spanning_circuits(m);
  std::vector<ElementSet> out;
  for (ElementSet f : pnc_flats(m)) {
    if (fundamental_among(m, f, spanning)) out.push_back(f);
  }
  return out;
}

FlatsReport flats_report(const Matroid& m) {
  const std::vector<ElementSet> flats = all_flats(m);
  const std::vector<ElementSet> spanning = spanning_circuits(m);
  std::vector<ElementSet> pnc;
  for (ElementSet f : flats) {
    if (is_pnc(m, f)) pnc.push_back(f);
  }
  FlatsReport report;
  for (ElementSet f : flats) {
    FlatInfo info;
    info.flat = f;
    info.rank = m.rank_of(f);
    info.nullity = f.size() - info.rank;
    info.is_connected = is_connected_set(m, f);
    info.is_cyclic = is_cyclic_set(m, f);
    info.is_pnc = std::binary_search(pnc.begin(), pnc.end(), f);
    if (info.is_pnc) {
      info.is_reducible = reducible_among(f, pnc);
      info.is_fundamental = fundamental_among(m, f, spanning);
    }
    report.entries.push_back(info);
  }
  std::stable_sort(report.entries.begin(), report.entries.end(),
                   [](const FlatInfo& a, const FlatInfo& b) { return a.rank < b.rank; });
  return report;
}

std::vector<std::pair<ElementSet, int>> connected_flats_signature(const Matroid& m) {
  if (!m.loops().empty()) {
    throw Error(ErrorCode::kHasLoops, "loops " + m.loops().to_string());
  }
  std::vector<std::pair<ElementSet, int>> out;
  for (ElementSet f : all_flats(m)) {
    if (!m.is_independent(f) && is_connected_set(m, f)) out.emplace_back(f, m.rank_of(f));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& a, const auto& b) { return a.second < b.second; });
  return out;
}

}  // namespace latmat
