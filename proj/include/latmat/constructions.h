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

#ifndef LATMAT_CONSTRUCTIONS_H_
#define LATMAT_CONSTRUCTIONS_H_

#include <vector>

#include "latmat/element_set.h"
#include "latmat/matroid.h"

namespace latmat {

// A matroid whose elements were renumbered to 0..n'-1. labels[i] is the
// element of the source matroid that became element i; relative order is
// preserved.
struct Relabeled {
  Matroid matroid;
  std::vector<int> labels;

  // Source-label set to target labels; elements not present are dropped.
  ElementSet image_of(ElementSet source) const;
  // Target-label set back to source labels.
  ElementSet preimage_of(ElementSet target) const;
};

// M \ del / con. Throws Overlap when del and con meet. Contracting a
// dependent set is allowed and drops rank by rank_of(con).
Relabeled minor(const Matroid& m, ElementSet del, ElementSet con);
Relabeled deletion(const Matroid& m, ElementSet x);
Relabeled contraction(const Matroid& m, ElementSet x);
Relabeled restriction(const Matroid& m, ElementSet x);

std::vector<ElementSet> circuits(const Matroid& m);
// Circuits of size rank + 1 that span.
std::vector<ElementSet> spanning_circuits(const Matroid& m);
// Sets X with rank_of(X) = r - 1 that are flats.
std::vector<ElementSet> hyperplanes(const Matroid& m);

// The finest direct-sum decomposition, ordered by least element.
std::vector<ElementSet> components(const Matroid& m);
bool is_connected(const Matroid& m);
// Whether the restriction M|x is connected. The empty set counts as
// connected.
bool is_connected_set(const Matroid& m, ElementSet x);

Matroid dual(const Matroid& m);
// Elements of b are renumbered after those of a.
Matroid direct_sum(const Matroid& a, const Matroid& b);
// Bases become the independent k-sets. Throws BadParameter unless
// 0 <= k <= rank.
Matroid truncate(const Matroid& m, int k);
// Adds element n placed freely.
Matroid free_extension(const Matroid& m);
Matroid free_coextension(const Matroid& m);

// P_x(M1, M2). The result keeps M1's labels; M2's elements other than x2
// follow in their original order, and x2 is identified with x1. Throws
// LoopBasepoint when x1 and x2 are both loops.
Matroid parallel_connection(const Matroid& m1, int x1, const Matroid& m2, int x2);

// Adds x as a basis. Throws NotCircuitHyperplane unless x is both.
Matroid relax(const Matroid& m, ElementSet x);

// Removes loops and keeps the least element of each parallel class.
Relabeled simplify(const Matroid& m);

}  // namespace latmat

#endif  // LATMAT_CONSTRUCTIONS_H_
