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

#ifndef LATMAT_RECOGNITION_H_
#define LATMAT_RECOGNITION_H_

#include <string>
#include <variant>
#include <vector>

#include "latmat/element_set.h"
#include "latmat/isomorphism.h"
#include "latmat/presentation.h"

namespace latmat {

// Clauses of the structural characterization of connected lattice path
// matroids, plus a final check that the derived order really presents the
// component.
enum class CharClause {
  kChains = 1,             // fundamental flats form <= 2 incomparable chains
  kIntersectingUnion = 2,  // F_i, G_j meet => F_i u G_j = E
  kPncIntersections = 3,   // other pnc-flats = qualifying F_i n G_j
  kIntersectionRank = 4,   // r(F_i n G_j) = r(F_i) + r(G_j) - r(M)
  kNoPresentation = 5,     // clauses hold but no presentation was found
};

const char* clause_name(CharClause clause);

struct ClauseViolation {
  CharClause clause;
  // The connected component being tested, in input labels.
  ElementSet component;
  // Offending flats, in input labels.
  std::vector<ElementSet> flats;
};

// minor(host, deleted, contracted) is isomorphic to the named pattern;
// iso[i] is the host element playing the role of pattern element i.
struct MinorWitness {
  std::string pattern;
  ElementSet deleted;
  ElementSet contracted;
  Permutation iso;
};

// The order search ran to completion without finding a path order.
struct NoPathOrder {};

struct RecognitionResult {
  bool verdict = false;
  std::variant<NoPathOrder, IntervalPresentation, ClauseViolation, MinorWitness> witness;
};

}  // namespace latmat

#endif  // LATMAT_RECOGNITION_H_
