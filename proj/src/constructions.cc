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

#include "latmat/constructions.h"

#include <algorithm>
#include <numeric>
#include <string>

namespace latmat {

ElementSet Relabeled::image_of(ElementSet source) const {
  ElementSet out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (source.contains(labels[i])) out = out.with(static_cast<int>(i));
  }
  return out;
}

ElementSet Relabeled::preimage_of(ElementSet target) const {
  ElementSet out;
  for (int i : target) out = out.with(labels[i]);
  return out;
}

namespace {

void require_subset(const Matroid& m, ElementSet x) {
  if (!x.is_subset_of(m.ground())) {
    throw Error(ErrorCode::kOutOfRange, x.to_string() + " is outside the ground set");
  }
}

void require_fits(int n) {
  if (n > kMaxElements) {
    throw Error(ErrorCode::kGroundTooLarge,
                "result would have " + std::to_string(n) + " elements");
  }
}

// Translates a set through a label map given as target-of-source.
ElementSet translate(ElementSet s, const std::vector<int>& target_of) {
  ElementSet out;
  for (int e : s) out = out.with(target_of[e]);
  return out;
}

}  // namespace

Relabeled minor(const Matroid& m, ElementSet del, ElementSet con) {
  require_subset(m, del);
  require_subset(m, con);
  if (del.intersects(con)) {
    throw Error(ErrorCode::kOverlap, "deletion " + del.to_string() +
                                         " and contraction " + con.to_string() +
                                         " overlap");
  }
  const ElementSet kept = m.ground() - del - con;
  const int spanning_rank = m.rank_of(m.ground() - del);
  const int new_rank = spanning_rank - m.rank_of(con);

  std::vector<int> labels = kept.elements();
  std::vector<int> target_of(m.size(), -1);
  for (std::size_t i = 0; i < labels.size(); ++i) target_of[labels[i]] = static_cast<int>(i);

  std::vector<ElementSet> bases;
  for (ElementSet x : subsets_of_size(kept, new_rank)) {
    if (m.rank_of(x | con) == spanning_rank && m.rank_of(x) == new_rank) {
      bases.push_back(translate(x, target_of));
    }
  }
  const int n = static_cast<int>(labels.size());
  return {Matroid::from_trusted_bases(n, std::move(bases)), std::move(labels)};
}

Relabeled deletion(const Matroid& m, ElementSet x) { return minor(m, x, {}); }
Relabeled contraction(const Matroid& m, ElementSet x) { return minor(m, {}, x); }
Relabeled restriction(const Matroid& m, ElementSet x) {
  require_subset(m, x);
  return minor(m, m.ground() - x, {});
}

std::vector<ElementSet> circuits(const Matroid& m) {
  std::vector<ElementSet> out;
  const Mask total = Mask{1} << m.size();
  for (Mask bits = 1; bits < total; ++bits) {
    const ElementSet x(bits);
    if (m.is_independent(x)) continue;
    bool minimal = true;
    for (int e : x) {
      if (!m.is_independent(x.without(e))) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(x);
  }
  return out;
}

std::vector<ElementSet> spanning_circuits(const Matroid& m) {
  std::vector<ElementSet> out;
  for (ElementSet c : circuits(m)) {
    if (m.rank_of(c) == m.rank()) out.push_back(c);
  }
  return out;
}

std::vector<ElementSet> hyperplanes(const Matroid& m) {
  std::vector<ElementSet> out;
  if (m.rank() == 0) return out;
  const Mask total = Mask{1} << m.size();
  for (Mask bits = 0; bits < total; ++bits) {
    const ElementSet x(bits);
    if (m.rank_of(x) == m.rank() - 1 && m.is_flat(x)) out.push_back(x);
  }
  return out;
}

std::vector<ElementSet> components(const Matroid& m) {
  std::vector<int> parent(m.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int e) {
    while (parent[e] != e) e = parent[e] = parent[parent[e]];
    return e;
  };
  for (ElementSet c : circuits(m)) {
    const int root = find(c.min_element());
    for (int e : c) parent[find(e)] = root;
  }
  std::vector<ElementSet> out;
  std::vector<int> slot(m.size(), -1);
  for (int e = 0; e < m.size(); ++e) {
    const int root = find(e);
    if (slot[root] < 0) {
      slot[root] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[slot[root]] = out[slot[root]].with(e);
  }
  return out;
}

bool is_connected(const Matroid& m) { return components(m).size() <= 1; }

bool is_connected_set(const Matroid& m, ElementSet x) {
  require_subset(m, x);
  if (x.size() <= 1) return true;
  const int low = x.min_element();
  const Mask rest = x.without(low).bits();
  const int rank_x = m.rank_of(x);
  // Every separator has a side containing the least element.
  for (Mask sub = 0;; sub = (sub - rest) & rest) {
    if (sub == rest) break;
    const ElementSet side = ElementSet(sub).with(low);
    if (m.rank_of(side) + m.rank_of(x - side) == rank_x) return false;
  }
  return true;
}

Matroid dual(const Matroid& m) {
  std::vector<ElementSet> bases;
  bases.reserve(m.basis_count());
  for (ElementSet b : m.bases()) bases.push_back(m.ground() - b);
  return Matroid::from_trusted_bases(m.size(), std::move(bases));
}

Matroid direct_sum(const Matroid& a, const Matroid& b) {
  require_fits(a.size() + b.size());
  std::vector<ElementSet> bases;
  bases.reserve(a.basis_count() * b.basis_count());
  for (ElementSet x : a.bases()) {
    for (ElementSet y : b.bases()) bases.push_back(x | ElementSet(y.bits() << a.size()));
  }
  return Matroid::from_trusted_bases(a.size() + b.size(), std::move(bases));
}

Matroid truncate(const Matroid& m, int k) {
  if (k < 0 || k > m.rank()) {
    throw Error(ErrorCode::kBadParameter, "cannot truncate a rank-" +
                                              std::to_string(m.rank()) + " matroid to rank " +
                                              std::to_string(k));
  }
  std::vector<ElementSet> bases;
  for (ElementSet x : subsets_of_size(m.ground(), k)) {
    if (m.is_independent(x)) bases.push_back(x);
  }
  return Matroid::from_trusted_bases(m.size(), std::move(bases));
}

Matroid free_extension(const Matroid& m) {
  require_fits(m.size() + 1);
  std::vector<ElementSet> bases(m.bases().begin(), m.bases().end());
  if (m.rank() > 0) {
    for (ElementSet x : subsets_of_size(m.ground(), m.rank() - 1)) {
      if (m.is_independent(x)) bases.push_back(x.with(m.size()));
    }
  }
  return Matroid::from_trusted_bases(m.size() + 1, std::move(bases));
}

Matroid free_coextension(const Matroid& m) { return dual(free_extension(dual(m))); }

Matroid parallel_connection(const Matroid& m1, int x1, const Matroid& m2, int x2) {
  if (x1 < 0 || x1 >= m1.size() || x2 < 0 || x2 >= m2.size()) {
    throw Error(ErrorCode::kOutOfRange, "basepoint outside its ground set");
  }
  if (m1.rank_of(ElementSet::singleton(x1)) + m2.rank_of(ElementSet::singleton(x2)) == 0) {
    throw Error(ErrorCode::kLoopBasepoint, "basepoint is a loop on both sides");
  }
  const int n = m1.size() + m2.size() - 1;
  require_fits(n);
  std::vector<int> target_of(m2.size());
  for (int f = 0, next = m1.size(); f < m2.size(); ++f) {
    target_of[f] = f == x2 ? x1 : next++;
  }
  std::vector<ElementSet> bases;
  for (ElementSet b1 : m1.bases()) {
    const bool has1 = b1.contains(x1);
    for (ElementSet b2 : m2.bases()) {
      const bool has2 = b2.contains(x2);
      if (has1 && has2) {
        bases.push_back(b1 | translate(b2, target_of));
      } else if (!has1 && has2) {
        bases.push_back(b1 | translate(b2.without(x2), target_of));
      } else if (has1 && !has2) {
        bases.push_back(b1.without(x1) | translate(b2, target_of));
      }
    }
  }
  return Matroid::from_trusted_bases(n, std::move(bases));
}

Matroid relax(const Matroid& m, ElementSet x) {
  require_subset(m, x);
  bool circuit = !m.is_independent(x);
  for (int e : x) circuit = circuit && m.is_independent(x.without(e));
  const bool hyperplane = m.rank() > 0 && m.rank_of(x) == m.rank() - 1 && m.is_flat(x);
  if (!circuit || !hyperplane) {
    throw Error(ErrorCode::kNotCircuitHyperplane,
                x.to_string() + " is not a circuit-hyperplane");
  }
  std::vector<ElementSet> bases(m.bases().begin(), m.bases().end());
  bases.push_back(x);
  return Matroid::from_trusted_bases(m.size(), std::move(bases));
}

Relabeled simplify(const Matroid& m) {
  const ElementSet loops = m.loops();
  ElementSet keep;
  for (int e : m.ground() - loops) {
    bool first_of_class = true;
    for (int f : keep) {
      if (m.rank_of(ElementSet{e, f}) == 1) {
        first_of_class = false;
        break;
      }
    }
    if (first_of_class) keep = keep.with(e);
  }
  return restriction(m, keep);
}

}  // namespace latmat
