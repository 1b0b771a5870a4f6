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

#include "latmat/matroid.h"

#include <algorithm>
#include <string>

namespace latmat {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kAxiomViolation: return "AxiomViolation";
    case ErrorCode::kEmptyFamily: return "EmptyFamily";
    case ErrorCode::kMixedCardinality: return "MixedCardinality";
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kGroundTooLarge: return "GroundTooLarge";
    case ErrorCode::kOverlap: return "Overlap";
    case ErrorCode::kBadParameter: return "BadParameter";
    case ErrorCode::kNotCircuitHyperplane: return "NotCircuitHyperplane";
    case ErrorCode::kLoopBasepoint: return "LoopBasepoint";
    case ErrorCode::kLoopContraction: return "LoopContraction";
    case ErrorCode::kLoopDeletion: return "LoopDeletion";
    case ErrorCode::kNotConnected: return "NotConnected";
    case ErrorCode::kNotPncFlat: return "NotPncFlat";
    case ErrorCode::kHasLoops: return "HasLoops";
    case ErrorCode::kInvalidPresentation: return "InvalidPresentation";
    case ErrorCode::kParse: return "Parse";
    case ErrorCode::kBadSpec: return "BadSpec";
  }
  return "Unknown";
}

AxiomViolation::AxiomViolation(ElementSet first, ElementSet second, int removed)
    : Error(ErrorCode::kAxiomViolation,
            "exchange fails for bases " + first.to_string() + " and " +
                second.to_string() + " removing " + std::to_string(removed)),
      first_(first),
      second_(second),
      removed_(removed) {}

namespace {

void check_family(int n, const std::vector<ElementSet>& bases) {
  if (n < 0) throw Error(ErrorCode::kBadParameter, "negative ground size");
  if (n > kMaxElements) {
    throw Error(ErrorCode::kGroundTooLarge,
                std::to_string(n) + " elements exceeds the cap of " +
                    std::to_string(kMaxElements));
  }
  if (bases.empty()) throw Error(ErrorCode::kEmptyFamily, "no bases given");
  const ElementSet ground = ElementSet::first(n);
  const int r = bases.front().size();
  for (ElementSet b : bases) {
    if (!b.is_subset_of(ground)) {
      throw Error(ErrorCode::kOutOfRange,
                  b.to_string() + " is not a subset of 0.." + std::to_string(n - 1));
    }
    if (b.size() != r) {
      throw Error(ErrorCode::kMixedCardinality,
                  bases.front().to_string() + " and " + b.to_string() +
                      " have different sizes");
    }
  }
}

std::vector<ElementSet> normalized(std::vector<ElementSet> bases) {
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  return bases;
}

}  // namespace

Matroid::Matroid(int n, std::vector<ElementSet> bases)
    : n_(n), rank_(bases.front().size()), bases_(std::move(bases)) {
  const std::size_t total = std::size_t{1} << n_;
  // First mark independent sets (subsets of bases), then fill ranks.
  std::vector<std::uint8_t> independent(total, 0);
  for (ElementSet b : bases_) independent[b.bits()] = 1;
  for (std::size_t m = total; m-- > 0;) {
    if (!independent[m]) continue;
    for (Mask rest = static_cast<Mask>(m); rest; rest &= rest - 1) {
      independent[m & ~(rest & -rest)] = 1;
    }
  }
  rank_table_.assign(total, 0);
  for (std::size_t m = 1; m < total; ++m) {
    if (independent[m]) {
      rank_table_[m] = static_cast<std::uint8_t>(std::popcount(static_cast<Mask>(m)));
      continue;
    }
    std::uint8_t best = 0;
    for (Mask rest = static_cast<Mask>(m); rest; rest &= rest - 1) {
      best = std::max(best, rank_table_[m & ~(rest & -rest)]);
    }
    rank_table_[m] = best;
  }
}

Matroid Matroid::from_trusted_bases(int n, std::vector<ElementSet> bases) {
  check_family(n, bases);
  return Matroid(n, normalized(std::move(bases)));
}

Matroid Matroid::from_bases(int n, std::vector<ElementSet> bases) {
  check_family(n, bases);
  bases = normalized(std::move(bases));
  const std::size_t total = std::size_t{1} << n;
  std::vector<std::uint8_t> member(total, 0);
  for (ElementSet b : bases) member[b.bits()] = 1;
  for (ElementSet b1 : bases) {
    for (ElementSet b2 : bases) {
      const ElementSet only_first = b1 - b2;
      const ElementSet only_second = b2 - b1;
      for (int x : only_first) {
        bool exchanged = false;
        for (int y : only_second) {
          if (member[(b1.without(x).with(y)).bits()]) {
            exchanged = true;
            break;
          }
        }
        if (!exchanged) throw AxiomViolation(b1, b2, x);
      }
    }
  }
  return Matroid(n, std::move(bases));
}

void Matroid::check_range(ElementSet x) const {
  if (!x.is_subset_of(ground())) {
    throw Error(ErrorCode::kOutOfRange,
                x.to_string() + " is not a subset of the ground set of size " +
                    std::to_string(n_));
  }
}

int Matroid::rank_of(ElementSet x) const {
  check_range(x);
  return rank_table_[x.bits()];
}

ElementSet Matroid::closure(ElementSet x) const {
  check_range(x);
  const int r = rank_table_[x.bits()];
  ElementSet out = x;
  for (int e : ground() - x) {
    if (rank_table_[x.with(e).bits()] == r) out = out.with(e);
  }
  return out;
}

ElementSet Matroid::loops() const { return closure(ElementSet()); }

ElementSet Matroid::coloops() const {
  ElementSet out = ground();
  for (ElementSet b : bases_) out = out & b;
  return out;
}

Matroid uniform(int r, int n) {
  if (r < 0 || r > n) {
    throw Error(ErrorCode::kBadParameter,
                "U_{" + std::to_string(r) + "," + std::to_string(n) + "} is undefined");
  }
  if (n > kMaxElements) throw Error(ErrorCode::kGroundTooLarge, "uniform matroid too large");
  return Matroid::from_trusted_bases(n, subsets_of_size(ElementSet::first(n), r));
}

}  // namespace latmat
