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

#include "latmat/lpm.h"

#include <algorithm>
#include <numeric>
#include <set>

#include "latmat/catalog.h"
#include "latmat/constructions.h"
#include "latmat/flats.h"
#include "latmat/minors.h"

namespace latmat {

const char* clause_name(CharClause clause) {
  switch (clause) {
    case CharClause::kChains: return "i";
    case CharClause::kIntersectingUnion: return "ii";
    case CharClause::kPncIntersections: return "iii";
    case CharClause::kIntersectionRank: return "iv";
    case CharClause::kNoPresentation: return "presentation";
  }
  return "?";
}

namespace {

// Endpoints of the candidate presentation for `order`, as positions.
std::vector<Interval> candidate_intervals(const Matroid& m, const std::vector<int>& order) {
  const int n = static_cast<int>(order.size());
  std::vector<int> lo, hi;
  ElementSet low_basis, high_basis;
  for (int p = 0; p < n; ++p) {
    const ElementSet grown = low_basis.with(order[p]);
    if (m.is_independent(grown)) {
      low_basis = grown;
      lo.push_back(p);
    }
  }
  for (int p = n - 1; p >= 0; --p) {
    const ElementSet grown = high_basis.with(order[p]);
    if (m.is_independent(grown)) {
      high_basis = grown;
      hi.push_back(p);
    }
  }
  std::reverse(hi.begin(), hi.end());
  std::vector<Interval> out(lo.size());
  for (std::size_t i = 0; i < lo.size(); ++i) out[i] = {lo[i], hi[i]};
  return out;
}

// Same test as realizes(), without building a presentation object.
bool accepts(const Matroid& m, const std::vector<int>& order,
             const std::vector<Interval>& js, std::vector<int>& position) {
  const int n = static_cast<int>(order.size());
  for (int p = 0; p < n; ++p) position[order[p]] = p;
  // Count transversals first; it rejects most orders cheaply.
  std::uint64_t ways[kMaxElements] = {};
  std::uint64_t next[kMaxElements] = {};
  if (!js.empty()) {
    for (int q = js[0].lo; q <= js[0].hi; ++q) ways[q] = 1;
    for (std::size_t i = 1; i < js.size(); ++i) {
      std::uint64_t below = 0;
      for (int q = 0; q < n; ++q) {
        next[q] = (q >= js[i].lo && q <= js[i].hi) ? below : 0;
        below += ways[q];
      }
      std::copy(next, next + n, ways);
    }
    std::uint64_t total = 0;
    for (int q = 0; q < n; ++q) total += ways[q];
    if (total != m.basis_count()) return false;
  } else if (m.basis_count() != 1) {
    return false;
  }
  for (ElementSet b : m.bases()) {
    Mask positions = 0;
    for (int e : b) positions |= Mask{1} << position[e];
    int i = 0;
    for (int q : ElementSet(positions)) {
      if (q < js[i].lo || q > js[i].hi) return false;
      ++i;
    }
  }
  return true;
}

bool comparable(ElementSet a, ElementSet b) { return a.is_subset_of(b) || b.is_subset_of(a); }

std::vector<ElementSet> to_host(const Relabeled& r, const std::vector<ElementSet>& sets) {
  std::vector<ElementSet> out;
  for (ElementSet s : sets) out.push_back(r.preimage_of(s));
  return out;
}

struct ComponentVerdict {
  std::optional<ClauseViolation> violation;
  // Path order of the component, in component labels.
  std::vector<int> order;
};

// Splits fundamental flats into chains, or reports why that is impossible.
// Each chain is sorted by inclusion; chains are ordered by their least
// member's bitmask.
std::optional<std::vector<ElementSet>> chain_violation(
    const std::vector<ElementSet>& fundamental, std::vector<std::vector<ElementSet>>& chains) {
  const std::size_t k = fundamental.size();
  std::vector<std::size_t> parent(k);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (comparable(fundamental[i], fundamental[j])) parent[find(i)] = find(j);
    }
  }
  std::vector<std::size_t> roots;
  std::vector<std::vector<ElementSet>> groups;
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t root = find(i);
    auto it = std::find(roots.begin(), roots.end(), root);
    if (it == roots.end()) {
      roots.push_back(root);
      groups.push_back({fundamental[i]});
    } else {
      groups[it - roots.begin()].push_back(fundamental[i]);
    }
  }
  for (const auto& group : groups) {
    for (std::size_t i = 0; i < group.size(); ++i) {
      for (std::size_t j = i + 1; j < group.size(); ++j) {
        if (!comparable(group[i], group[j])) return std::vector<ElementSet>{group[i], group[j]};
      }
    }
  }
  if (groups.size() > 2) {
    return std::vector<ElementSet>{groups[0].front(), groups[1].front(), groups[2].front()};
  }
  for (auto& group : groups) {
    std::sort(group.begin(), group.end(),
              [](ElementSet a, ElementSet b) { return a.size() < b.size(); });
  }
  std::sort(groups.begin(), groups.end(), [](const auto& a, const auto& b) {
    return *std::min_element(a.begin(), a.end()) < *std::min_element(b.begin(), b.end());
  });
  chains = std::move(groups);
  return std::nullopt;
}

// Tests a connected component (restricted and relabeled) against the
// characterization. Flats in the returned violation use component labels.
ComponentVerdict check_component(const Matroid& m) {
  ComponentVerdict verdict;
  const ElementSet ground = m.ground();
  const std::vector<ElementSet> fundamental = fundamental_flats(m);
  const std::vector<ElementSet> pnc = pnc_flats(m);

  std::vector<std::vector<ElementSet>> chains;
  if (auto bad = chain_violation(fundamental, chains)) {
    verdict.violation = ClauseViolation{CharClause::kChains, ground, *bad};
    return verdict;
  }
  static const std::vector<ElementSet> kEmpty;
  const auto& first = chains.size() > 0 ? chains[0] : kEmpty;
  const auto& second = chains.size() > 1 ? chains[1] : kEmpty;

  for (ElementSet f : first) {
    for (ElementSet g : second) {
      if (f.intersects(g) && (f | g) != ground) {
        verdict.violation = ClauseViolation{CharClause::kIntersectingUnion, ground, {f, g}};
        return verdict;
      }
    }
  }

  const int total_nullity = m.nullity(ground);
  std::set<ElementSet> qualifying;
  for (ElementSet f : first) {
    for (ElementSet g : second) {
      if (total_nullity < m.nullity(f) + m.nullity(g)) qualifying.insert(f & g);
    }
  }
  std::set<ElementSet> others;
  for (ElementSet f : pnc) {
    if (!std::binary_search(fundamental.begin(), fundamental.end(), f)) others.insert(f);
  }
  if (others != qualifying) {
    std::vector<ElementSet> mismatch;
    std::set_symmetric_difference(others.begin(), others.end(), qualifying.begin(),
                                  qualifying.end(), std::back_inserter(mismatch));
    verdict.violation = ClauseViolation{CharClause::kPncIntersections, ground, mismatch};
    return verdict;
  }

  for (ElementSet f : first) {
    for (ElementSet g : second) {
      const ElementSet meet = f & g;
      if (!std::binary_search(pnc.begin(), pnc.end(), meet)) continue;
      if (m.rank_of(meet) != m.rank_of(f) + m.rank_of(g) - m.rank()) {
        verdict.violation = ClauseViolation{CharClause::kIntersectionRank, ground, {f, g, meet}};
        return verdict;
      }
    }
  }

  // Order: members of the first chain as prefixes, the second as suffixes.
  // Elements with identical memberships are interchangeable.
  const int n = m.size();
  auto depth = [](const std::vector<ElementSet>& chain, int e) {
    for (std::size_t i = 0; i < chain.size(); ++i) {
      if (chain[i].contains(e)) return static_cast<int>(i);
    }
    return static_cast<int>(chain.size());
  };
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    const int fa = depth(first, a), fb = depth(first, b);
    if (fa != fb) return fa < fb;
    return depth(second, a) > depth(second, b);
  });
  std::vector<int> position(n);
  if (!accepts(m, order, candidate_intervals(m, order), position)) {
    verdict.violation = ClauseViolation{CharClause::kNoPresentation, ground, fundamental};
    return verdict;
  }
  verdict.order = std::move(order);
  return verdict;
}

}  // namespace

IntervalPresentation candidate_presentation(const Matroid& m, const std::vector<int>& order) {
  return IntervalPresentation::create(m.size(), candidate_intervals(m, order), order);
}

std::optional<IntervalPresentation> find_path_order(const Matroid& m,
                                                    const OracleOptions& options) {
  if (m.size() > options.max_elements) {
    throw Error(ErrorCode::kGroundTooLarge,
                "order search is limited to " + std::to_string(options.max_elements) +
                    " elements");
  }
  const ElementSet loops = m.loops();
  const Relabeled loopless = deletion(m, loops);
  const Matroid& core = loopless.matroid;
  const int n = core.size();

  std::vector<int> perm(n), position(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (options.use_reversal_symmetry && n >= 2 && perm.front() > perm.back()) continue;
    std::vector<Interval> js = candidate_intervals(core, perm);
    if (!accepts(core, perm, js, position)) continue;
    std::vector<int> order;
    for (int e : perm) order.push_back(loopless.labels[e]);
    for (int e : loops) order.push_back(e);
    return IntervalPresentation::create(m.size(), std::move(js), std::move(order));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

RecognitionResult recognize_with_oracle(const Matroid& m, const OracleOptions& options) {
  RecognitionResult result;
  if (auto p = find_path_order(m, options)) {
    result.verdict = true;
    result.witness = std::move(*p);
  }
  return result;
}

RecognitionResult is_lpm_char(const Matroid& m) {
  RecognitionResult result;
  std::vector<int> order;
  std::vector<Interval> intervals;
  ElementSet loops;
  for (ElementSet component : components(m)) {
    if (m.rank_of(component) == 0) {
      loops = loops | component;
      continue;
    }
    const Relabeled part = restriction(m, component);
    ComponentVerdict verdict = check_component(part.matroid);
    if (verdict.violation) {
      ClauseViolation v = *verdict.violation;
      v.component = component;
      v.flats = to_host(part, v.flats);
      result.witness = std::move(v);
      return result;
    }
    const int offset = static_cast<int>(order.size());
    for (Interval j : candidate_intervals(part.matroid, verdict.order)) {
      intervals.push_back({j.lo + offset, j.hi + offset});
    }
    for (int e : verdict.order) order.push_back(part.labels[e]);
  }
  for (int e : loops) order.push_back(e);
  IntervalPresentation p = IntervalPresentation::create(m.size(), intervals, order);
  if (!realizes(p, m)) {
    result.witness = ClauseViolation{CharClause::kNoPresentation, m.ground(), {}};
    return result;
  }
  result.verdict = true;
  result.witness = std::move(p);
  return result;
}

bool is_nested(const Matroid& m) {
  const Matroid core = deletion(m, m.loops()).matroid;
  const std::vector<ElementSet> pnc = pnc_flats(core);
  for (std::size_t i = 0; i < pnc.size(); ++i) {
    for (std::size_t j = i + 1; j < pnc.size(); ++j) {
      if (!comparable(pnc[i], pnc[j])) return false;
    }
  }
  return true;
}

bool is_nested_via_pn(const Matroid& m) {
  for (int n = 2; 2 * n <= m.size() && n <= m.rank(); ++n) {
    if (has_minor(m, p_n(n))) return false;
  }
  return true;
}

}  // namespace latmat
