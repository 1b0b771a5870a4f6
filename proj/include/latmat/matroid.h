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

#ifndef LATMAT_MATROID_H_
#define LATMAT_MATROID_H_

#include <cstdint>
#include <vector>

#include "latmat/element_set.h"
#include "latmat/errors.h"

namespace latmat {

// A matroid on {0, ..., n-1} given by its basis family.
//
// Values are immutable. Construction precomputes a rank table over all
// 2^n subsets, so rank, independence, and closure queries are O(1) or
// O(n). Loops (in no basis) and coloops (in every basis) are implicit.
class Matroid {
 public:
  // Validates the basis axioms. Throws EmptyFamily, MixedCardinality,
  // OutOfRange, GroundTooLarge, or AxiomViolation (with a witnessing pair).
  static Matroid from_bases(int n, std::vector<ElementSet> bases);

  // For families already known to satisfy the exchange axiom (outputs of
  // constructions on valid matroids). Cardinalities and ranges are still
  // checked; exchange is not.
  static Matroid from_trusted_bases(int n, std::vector<ElementSet> bases);

  int size() const { return n_; }
  int rank() const { return rank_; }
  ElementSet ground() const { return ElementSet::first(n_); }
  // Sorted by bitmask, no duplicates.
  const std::vector<ElementSet>& bases() const { return bases_; }
  std::size_t basis_count() const { return bases_.size(); }

  int rank_of(ElementSet x) const;
  int nullity(ElementSet x) const { return x.size() - rank_of(x); }
  bool is_independent(ElementSet x) const { return rank_of(x) == x.size(); }
  bool is_basis(ElementSet x) const {
    return x.size() == rank_ && rank_of(x) == rank_;
  }
  ElementSet closure(ElementSet x) const;
  bool is_flat(ElementSet x) const { return closure(x) == x; }

  ElementSet loops() const;
  ElementSet coloops() const;

  friend bool operator==(const Matroid& a, const Matroid& b) {
    return a.n_ == b.n_ && a.bases_ == b.bases_;
  }

 private:
  Matroid(int n, std::vector<ElementSet> bases);
  void check_range(ElementSet x) const;

  int n_ = 0;
  int rank_ = 0;
  std::vector<ElementSet> bases_;
  std::vector<std::uint8_t> rank_table_;
};

// U_{r,n}.
Matroid uniform(int r, int n);

}  // namespace latmat

#endif  // LATMAT_MATROID_H_
