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


// Shared fixtures and brute-force reference implementations for the unit
// tests. Nothing here calls the code paths it is used to check.

#ifndef LATMAT_TESTS_TEST_UTIL_H_
#define LATMAT_TESTS_TEST_UTIL_H_

#include <algorithm>
#include <numeric>
#include <vector>

#include "latmat/corpus.h"
#include "latmat/isomorphism.h"
#include "latmat/matroid.h"

namespace latmat::testing {

// Largest intersection with a basis.
inline int brute_rank(const Matroid& m, ElementSet x) {
  int best = 0;
  for (ElementSet b : m.bases()) best = std::max(best, (x & b).size());
  return best;
}

inline bool brute_independent(const Matroid& m, ElementSet x) {
  return std::any_of(m.bases().begin(), m.bases().end(),
                     [&](ElementSet b) { return x.is_subset_of(b); });
}

// Minimal dependent sets, found by checking every subset.
inline std::vector<ElementSet> brute_circuits(const Matroid& m) {
  std::vector<ElementSet> out;
  for (Mask x = 0; x < (Mask{1} << m.size()); ++x) {
    const ElementSet s(x);
    if (brute_independent(m, s)) continue;
    bool minimal = true;
    for (int e : s) minimal = minimal && brute_independent(m, s.without(e));
    if (minimal) out.push_back(s);
  }
  return out;
}

// Connected means any two elements share a circuit inside x, closed
// transitively. Single elements and the empty set count as connected.
inline bool brute_connected(const std::vector<ElementSet>& all_circuits, ElementSet x) {
  if (x.size() <= 1) return true;
  ElementSet reached = ElementSet::singleton(x.min_element());
  for (bool grew = true; grew;) {
    grew = false;
    for (ElementSet c : all_circuits) {
      if (c.is_subset_of(x) && c.intersects(reached) && !c.is_subset_of(reached)) {
        reached = reached | c;
        grew = true;
      }
    }
  }
  return reached == x;
}

inline Matroid relabel(const Matroid& m, const Permutation& p) {
  std::vector<ElementSet> bases;
  for (ElementSet b : m.bases()) {
    ElementSet image;
    for (int e : b) image = image.with(p[e]);
    bases.push_back(image);
  }
  return Matroid::from_trusted_bases(m.size(), std::move(bases));
}

inline Permutation random_permutation(Rng& rng, int n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0);
  for (int i = n - 1; i > 0; --i) std::swap(p[i], p[rng.between(0, i)]);
  return p;
}

// Tries every bijection.
inline bool brute_isomorphic(const Matroid& a, const Matroid& b) {
  if (a.size() != b.size() || a.rank() != b.rank() || a.basis_count() != b.basis_count()) {
    return false;
  }
  Permutation p(a.size());
  std::iota(p.begin(), p.end(), 0);
  do {
    if (relabel(a, p) == b) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

inline int brute_automorphism_count(const Matroid& m) {
  Permutation p(m.size());
  std::iota(p.begin(), p.end(), 0);
  int count = 0;
  do {
    count += relabel(m, p) == m;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

// A mixed corpus on at most 7 elements, built once per test binary.
inline const std::vector<Matroid>& small_corpus() {
  static const std::vector<Matroid> corpus = generate(CorpusSpec::parse(
      "catalog-minors,random-transversal,random-sparse-paving,lpm-random,duals-closure,"
      "count=60,max-n=7,seed=11"));
  return corpus;
}

}  // namespace latmat::testing

#endif  // LATMAT_TESTS_TEST_UTIL_H_
