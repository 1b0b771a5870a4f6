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

#ifndef LATMAT_ERRORS_H_
#define LATMAT_ERRORS_H_

#include <stdexcept>
#include <string>

#include "latmat/element_set.h"

namespace latmat {

enum class ErrorCode {
  kAxiomViolation,
  kEmptyFamily,
  kMixedCardinality,
  kOutOfRange,
  kGroundTooLarge,
  kOverlap,
  kBadParameter,
  kNotCircuitHyperplane,
  kLoopBasepoint,
  kLoopContraction,
  kLoopDeletion,
  kNotConnected,
  kNotPncFlat,
  kHasLoops,
  kInvalidPresentation,
  kParse,
  kBadSpec,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Raised by from_bases when the exchange axiom fails: removing `removed`
// from `first` admits no replacement from `second`.
class AxiomViolation : public Error {
 public:
  AxiomViolation(ElementSet first, ElementSet second, int removed);
  ElementSet first() const { return first_; }
  ElementSet second() const { return second_; }
  int removed() const { return removed_; }

 private:
  ElementSet first_;
  ElementSet second_;
  int removed_;
};

}  // namespace latmat

#endif  // LATMAT_ERRORS_H_
