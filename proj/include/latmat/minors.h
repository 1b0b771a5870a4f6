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

#ifndef LATMAT_MINORS_H_
#define LATMAT_MINORS_H_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "latmat/catalog.h"
#include "latmat/matroid.h"
#include "latmat/recognition.h"

namespace latmat {

// Exhaustive search for a minor of `host` isomorphic to `pattern`. Only
// contraction sets that are independent and deletion sets that are
// coindependent after contraction are tried; every minor has such a
// representation. Sets in the witness use host labels.
std::optional<MinorWitness> has_minor(const Matroid& host, const Matroid& pattern,
                                      const std::string& pattern_name = "pattern");

// First catalog member (smallest first) that is a minor of m.
std::optional<MinorWitness> find_catalog_minor(const Matroid& m);
std::optional<MinorWitness> find_catalog_minor(const Matroid& m,
                                               const std::vector<CatalogEntry>& catalog);

bool is_lpm_via_excluded_minors(const Matroid& m);
RecognitionResult recognize_with_excluded_minors(const Matroid& m);

struct TheoremVerdicts {
  bool oracle = false;
  bool characterization = false;
  bool excluded_minors = false;
  bool agree() const { return oracle == characterization && oracle == excluded_minors; }
};

struct TheoremDisagreement {
  std::size_t index;
  Matroid matroid;
  TheoremVerdicts verdicts;
};

struct TheoremReport {
  std::string corpus_spec;
  std::size_t total = 0;
  std::size_t in_class = 0;       // all three recognizers accept
  std::size_t not_in_class = 0;   // all three reject
  std::map<int, std::size_t> by_size;
  std::vector<TheoremDisagreement> disagreements;
};

// Runs the three recognizers on every member. The report does not depend
// on `workers`. Members must have at most 9 elements.
TheoremReport theorem_check(const std::vector<Matroid>& corpus, int workers = 1);

}  // namespace latmat

#endif  // LATMAT_MINORS_H_
