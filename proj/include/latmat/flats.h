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

#ifndef LATMAT_FLATS_H_
#define LATMAT_FLATS_H_

#include <utility>
#include <vector>

#include "latmat/element_set.h"
#include "latmat/matroid.h"

namespace latmat {

// Classification of flats.
//
// A flat is connected when its restriction is connected and cyclic when it
// is a union of circuits. "Nontrivial" means dependent, so a pnc-flat is a
// proper, dependent, connected flat: a parallel class of two or more
// elements qualifies, a single non-loop element does not. A pnc-flat is
// reducible when it is the intersection of two incomparable pnc-flats, and
// fundamental when some spanning circuit meets it in a basis of the flat.
//
// All functions enumerate the 2^n subsets; lists are sorted by bitmask.

struct FlatInfo {
  ElementSet flat;
  int rank = 0;
  int nullity = 0;
  bool is_connected = false;
  bool is_cyclic = false;
  bool is_pnc = false;
  bool is_reducible = false;
  bool is_fundamental = false;
};

struct FlatsReport {
  // Sorted by rank, then bitmask.
  std::vector<FlatInfo> entries;
};

FlatsReport flats_report(const Matroid& m);

std::vector<ElementSet> all_flats(const Matroid& m);
std::vector<ElementSet> cyclic_flats(const Matroid& m);
std::vector<ElementSet> pnc_flats(const Matroid& m);
// Throws NotPncFlat when f is not a pnc-flat of m.
bool is_reducible(const Matroid& m, ElementSet f);
std::vector<ElementSet> irreducible_pnc_flats(const Matroid& m);
// Searches spanning circuits directly; does not assume membership in any
// class of matroids.
std::vector<ElementSet> fundamental_flats(const Matroid& m);

bool is_cyclic_set(const Matroid& m, ElementSet x);

// Nontrivial connected flats (including E when it qualifies) with their
// ranks, sorted by rank then bitmask. Throws HasLoops. Two loopless
// matroids on the same ground set are equal iff their signatures are.
std::vector<std::pair<ElementSet, int>> connected_flats_signature(const Matroid& m);

}  // namespace latmat

#endif  // LATMAT_FLATS_H_
