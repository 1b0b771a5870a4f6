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

#ifndef LATMAT_CATALOG_H_
#define LATMAT_CATALOG_H_

#include <string>
#include <vector>

#include "latmat/matroid.h"

namespace latmat {

// P_n = T_n(U_{n-1,n} + U_{n-1,n}), n >= 2.
Matroid p_n(int n);
// P'_n = T_n of the parallel connection of two n-circuits, n >= 3. The
// basepoint is element n - 1.
Matroid p_prime_n(int n);

// Excluded minors of the lattice path matroids.
Matroid a_n(int n);           // P'_n + x, n >= 3
Matroid b_nk(int n, int k);   // T_n(U_{n-1,n} + U_{n-1,n} + U_{k-1,k}), n >= k >= 2
Matroid c_nk(int n, int k);   // dual of b_nk(n, k); this is C_{n+k,k}
Matroid d_n(int n);           // (P_{n-1} + U_{1,1}) + x, n >= 4
Matroid e_n(int n);           // dual of d_n(n)
// Cycle matroid of K_4 with triangles {0,1,2}, {0,3,4}, {1,4,5}, {2,3,5}.
Matroid wheel3();
// wheel3 with the rim {0,1,2} relaxed.
Matroid whirl3();
// Parallel extension, at element 2, of the rank-4 sparse paving matroid on
// six elements whose circuit-hyperplanes are {0,1,2,3} and {2,3,4,5}.
Matroid r4();
Matroid r3();  // dual of r4

// kUniform is only reachable through family_by_name.
enum class Family { kA, kB, kC, kD, kE, kW3, kWhirl3, kR3, kR4, kP, kPprime, kUniform };

struct CatalogEntry {
  Family family;
  std::vector<int> params;
  Matroid matroid;
  // Stable identifier: A3, B2,2, C4,2, D4, E4, W3, Whirl3, R3, R4, P3,
  // Pprime3.
  std::string name;
};

// Every excluded minor with at most m elements (m >= 6), ordered by size
// and then family, deduplicated up to isomorphism.
std::vector<CatalogEntry> catalog_up_to(int m);

// Builds a family member from its identifier. Besides the catalog names,
// U<r>,<n> gives a uniform matroid. Throws BadParameter.
CatalogEntry family_by_name(const std::string& name);

struct SingleElementMinor {
  int element;
  bool contracted;  // false: deletion
  bool in_class;
};

struct ExcludedMinorReport {
  bool is_excluded_minor = false;
  bool in_class = false;
  std::vector<SingleElementMinor> minors;
};

// m is outside the class while every single-element deletion and
// contraction is inside, as decided by the order-search oracle. Throws
// GroundTooLarge above 9 elements.
ExcludedMinorReport verify_excluded_minor(const Matroid& m);

}  // namespace latmat

#endif  // LATMAT_CATALOG_H_
