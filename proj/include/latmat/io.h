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

#ifndef LATMAT_IO_H_
#define LATMAT_IO_H_

#include <string>
#include <variant>

#include "latmat/flats.h"
#include "latmat/matroid.h"
#include "latmat/minors.h"
#include "latmat/presentation.h"
#include "latmat/recognition.h"

namespace latmat {

// Matroid files:
//   MATROID <n> <r>
//   <r strictly increasing elements per line, one line per basis>
// Presentation files:
//   LPM <n> <r>
//   <a_i> <b_i>        (r lines, 0-based positions)
//   ORDER <perm>       (optional; element at each position)
// In both, lines starting with '#' and blank lines are skipped. A rank-0
// matroid file lists no bases; the empty basis is implied. Parse errors
// throw Error(kParse) with a line number.
Matroid parse_matroid(const std::string& text);
IntervalPresentation parse_presentation(const std::string& text);
std::variant<Matroid, IntervalPresentation> parse_any(const std::string& text);

// Canonical text: bases sorted lexicographically.
std::string format_matroid(const Matroid& m);
std::string format_presentation(const IntervalPresentation& p);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);
// Either kind of file; presentations are realized.
Matroid load_matroid(const std::string& path);

// "{0,1,5}" with elements separated by commas.
std::string format_set(ElementSet s);
// One line: pattern name, deleted and contracted sets, then the map from
// pattern elements to host elements.
std::string format_witness(const MinorWitness& w);
std::string format_recognition(const RecognitionResult& result);

std::string flats_table(const Matroid& m, const FlatsReport& report);
// Keys: n, rank, bases, flats[] with flat, rank, nullity, connected,
// cyclic, pnc, reducible, fundamental. Sets are sorted element lists.
std::string flats_json(const Matroid& m, const FlatsReport& report);

// Keys: corpus, total, in_class, not_in_class, by_size (size -> count),
// disagreements[] with index, n, bases, oracle, characterization,
// excluded_minors. Contains nothing that varies between runs.
std::string theorem_json(const TheoremReport& report);
std::string theorem_text(const TheoremReport& report);

}  // namespace latmat

#endif  // LATMAT_IO_H_
