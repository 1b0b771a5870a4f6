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

#ifndef LATMAT_LPM_H_
#define LATMAT_LPM_H_

#include <optional>
#include <vector>

#include "latmat/matroid.h"
#include "latmat/presentation.h"
#include "latmat/recognition.h"

namespace latmat {

// The only interval presentation a fixed order can carry: lo_i and hi_i are
// the i-th positions of the Gale-least and Gale-greatest bases in that
// order. order[p] is the element at position p.
IntervalPresentation candidate_presentation(const Matroid& m, const std::vector<int>& order);

struct OracleOptions {
  // Orders are enumerated exhaustively, so the bound is kept small.
  int max_elements = 9;
  // Skip orders whose first element exceeds their last; the reversal of a
  // path order is a path order. Turning this off gives the reference
  // search over all n! orders.
  bool use_reversal_symmetry = true;
};

// Brute-force recognizer. Loops are set aside, every order of the other
// elements is tried with its candidate presentation, and loops are appended
// after the last interval. Returns the presentation for the
// lexicographically least accepting order. Throws GroundTooLarge above
// options.max_elements.
std::optional<IntervalPresentation> find_path_order(const Matroid& m,
                                                    const OracleOptions& options = {});
RecognitionResult recognize_with_oracle(const Matroid& m, const OracleOptions& options = {});

// Structural recognizer. Tests each connected component (loops removed)
// against the fundamental-flat characterization, then derives a path order
// from the two chains and confirms it. On success the witness presents m.
RecognitionResult is_lpm_char(const Matroid& m);

// Pnc-flats of the loopless part form a chain.
bool is_nested(const Matroid& m);
// No P_n minor for 2 <= n with 2n <= |E| and n <= rank.
bool is_nested_via_pn(const Matroid& m);

}  // namespace latmat

#endif  // LATMAT_LPM_H_
