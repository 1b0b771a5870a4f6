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

#ifndef LATMAT_ISOMORPHISM_H_
#define LATMAT_ISOMORPHISM_H_

#include <optional>
#include <string>
#include <vector>

#include "latmat/matroid.h"

namespace latmat {

// A permutation as image-of-element: p[e] is where e goes.
using Permutation = std::vector<int>;

struct CanonicalLabeling {
  // Equal for two matroids iff they are isomorphic.
  std::string form;
  // position[e] is the canonical label of element e.
  Permutation position;
};

// Individualization-refinement search. Cells are refined by how often an
// element lies in a basis and by pairwise basis co-occurrence; the leaf
// with the lexicographically least relabeled basis list wins. Automorphisms
// discovered along the way prune equivalent branches.
CanonicalLabeling canonical_labeling(const Matroid& m);
std::string canonical_form(const Matroid& m);

// Returns f with f[e] in m2 for each e in m1 and B a basis of m1 iff f(B) is
// a basis of m2.
std::optional<Permutation> is_isomorphic(const Matroid& m1, const Matroid& m2);

// The full automorphism group, listed in lexicographic order. Intended for
// small or rigid matroids; the group of U_{r,n} has n! members.
std::vector<Permutation> automorphisms(const Matroid& m);

ElementSet permute(const Permutation& p, ElementSet s);

}  // namespace latmat

#endif  // LATMAT_ISOMORPHISM_H_
