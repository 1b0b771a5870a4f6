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

#ifndef LATMAT_PRESENTATION_H_
#define LATMAT_PRESENTATION_H_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "latmat/element_set.h"
#include "latmat/matroid.h"

namespace latmat {

// Closed range of path-order positions.
struct Interval {
  int lo = 0;
  int hi = 0;
  friend bool operator==(const Interval&, const Interval&) = default;
};

// An antichain of intervals [lo_1, hi_1], ..., [lo_r, hi_r] in a linear
// order on {0, ..., n-1}, with lo and hi both strictly increasing.
// Positions covered by no interval hold loops.
class IntervalPresentation {
 public:
  // `order[p]` is the element at position p; empty means identity. Throws
  // InvalidPresentation on malformed input.
  static IntervalPresentation create(int n, std::vector<Interval> intervals,
                                     std::vector<int> order = {});

  int size() const { return n_; }
  int rank() const { return static_cast<int>(intervals_.size()); }
  const std::vector<Interval>& intervals() const { return intervals_; }
  const std::vector<int>& order() const { return order_; }
  int element_at(int position) const { return order_[position]; }
  int position_of(int element) const { return position_[element]; }
  bool has_identity_order() const;

  // Elements at positions lo..hi.
  ElementSet elements_between(int lo, int hi) const;
  ElementSet interval_elements(int i) const {
    return elements_between(intervals_[i].lo, intervals_[i].hi);
  }
  // How many intervals cover the element.
  int multiplicity(int element) const;

  friend bool operator==(const IntervalPresentation& a, const IntervalPresentation& b) {
    return a.n_ == b.n_ && a.intervals_ == b.intervals_ && a.order_ == b.order_;
  }

 private:
  IntervalPresentation() = default;

  int n_ = 0;
  std::vector<Interval> intervals_;
  std::vector<int> order_;
  std::vector<int> position_;
};

// Bases are the sets whose positions x_1 < ... < x_r satisfy x_i in J_i.
Matroid realize(const IntervalPresentation& p);

// Number of bases of realize(p), by dynamic programming over positions.
std::uint64_t count_bases(const IntervalPresentation& p);

// realize(p) == m, decided without building realize(p): every basis of m
// must be a lattice-path transversal and the counts must agree.
bool realizes(const IntervalPresentation& p, const Matroid& m);

// Connectivity read off the endpoints: lo_1 is the first position, hi_r
// the last, and lo_{i+1} <= hi_i throughout. With no intervals, true only
// for ground sets of at most one element.
bool presentation_connected(const IntervalPresentation& p);

// Presentation of M/y in the induced order. Elements above y are renumbered
// down by one, matching contraction() in the kernel. Throws LoopContraction
// if y is covered by no interval.
IntervalPresentation contract_presentation(const IntervalPresentation& p, int y);

enum class Terminal { kFirst, kLast };

// Presentation of M \ e for the first or last element e of the path order,
// renumbered as in contract_presentation. Throws LoopDeletion when e is a
// loop.
IntervalPresentation delete_terminal_presentation(const IntervalPresentation& p,
                                                  Terminal end);

// Prefix flats [e_1, p(lo_{j+1})] of rank j where p(lo_{j+1}) > lo_j, and
// suffix flats [s(hi_k), e_n] of rank r - k where s(hi_k) < hi_{k+1}.
// Throws NotConnected unless presentation_connected(p).
std::vector<std::pair<ElementSet, int>> fundamental_flats_from_presentation(
    const IntervalPresentation& p);

// ASCII picture of the region between the two bounding lattice paths.
std::string diagram(const IntervalPresentation& p);

}  // namespace latmat

#endif  // LATMAT_PRESENTATION_H_
