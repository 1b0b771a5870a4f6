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

#include "latmat/presentation.h"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace latmat {

namespace {

[[noreturn]] void invalid(const std::string& why) {
  throw Error(ErrorCode::kInvalidPresentation, why);
}

// Removes position q from the order and renumbers elements above the
// removed one.
std::vector<int> order_without(const std::vector<int>& order, int q) {
  const int removed = order[q];
  std::vector<int> out;
  out.reserve(order.size() - 1);
  for (int p = 0; p < static_cast<int>(order.size()); ++p) {
    if (p == q) continue;
    out.push_back(order[p] > removed ? order[p] - 1 : order[p]);
  }
  return out;
}

}  // namespace

IntervalPresentation IntervalPresentation::create(int n, std::vector<Interval> intervals,
                                                  std::vector<int> order) {
  if (n < 0) invalid("negative size");
  if (n > kMaxElements) {
    throw Error(ErrorCode::kGroundTooLarge, std::to_string(n) + " elements");
  }
  if (order.empty()) {
    order.resize(n);
    std::iota(order.begin(), order.end(), 0);
  }
  if (static_cast<int>(order.size()) != n) invalid("order has the wrong length");
  std::vector<int> position(n, -1);
  for (int p = 0; p < n; ++p) {
    const int e = order[p];
    if (e < 0 || e >= n || position[e] >= 0) invalid("order is not a permutation");
    position[e] = p;
  }
  if (static_cast<int>(intervals.size()) > n) invalid("more intervals than elements");
  for (std::size_t i = 0; i < intervals.size(); ++i) {
    const Interval& j = intervals[i];
    if (j.lo < 0 || j.hi >= n || j.lo > j.hi) {
      invalid("interval [" + std::to_string(j.lo) + "," + std::to_string(j.hi) +
              "] is empty or out of range");
    }
    if (i > 0 && (intervals[i - 1].lo >= j.lo || intervals[i - 1].hi >= j.hi)) {
      invalid("endpoints must be strictly increasing");
    }
  }
  IntervalPresentation out;
  out.n_ = n;
  out.intervals_ = std::move(intervals);
  out.order_ = std::move(order);
  out.position_ = std::move(position);
  return out;
}

bool IntervalPresentation::has_identity_order() const {
  for (int p = 0; p < n_; ++p) {
    if (order_[p] != p) return false;
  }
  return true;
}

ElementSet IntervalPresentation::elements_between(int lo, int hi) const {
  ElementSet out;
  for (int p = std::max(lo, 0); p <= hi && p < n_; ++p) out = out.with(order_[p]);
  return out;
}

int IntervalPresentation::multiplicity(int element) const {
  const int q = position_[element];
  int count = 0;
  for (const Interval& j : intervals_) count += (j.lo <= q && q <= j.hi);
  return count;
}

Matroid realize(const IntervalPresentation& p) {
  const auto& js = p.intervals();
  const int r = p.rank();
  std::vector<ElementSet> bases;
  auto choose = [&](auto& self, int i, int min_position, ElementSet chosen) -> void {
    if (i == r) {
      bases.push_back(chosen);
      return;
    }
    for (int q = std::max(js[i].lo, min_position); q <= js[i].hi; ++q) {
      self(self, i + 1, q + 1, chosen.with(p.element_at(q)));
    }
  };
  choose(choose, 0, 0, ElementSet());
  return Matroid::from_trusted_bases(p.size(), std::move(bases));
}

std::uint64_t count_bases(const IntervalPresentation& p) {
  const int n = p.size();
  const auto& js = p.intervals();
  // ways[q] = number of ways to pick x_1 < ... < x_i with x_i = q.
  std::vector<std::uint64_t> ways(n, 0), next(n, 0);
  if (js.empty()) return 1;
  for (int q = js[0].lo; q <= js[0].hi; ++q) ways[q] = 1;
  for (std::size_t i = 1; i < js.size(); ++i) {
    std::fill(next.begin(), next.end(), 0);
    std::uint64_t below = 0;
    for (int q = 0; q < n; ++q) {
      if (q >= js[i].lo && q <= js[i].hi) next[q] = below;
      below += ways[q];
    }
    std::swap(ways, next);
  }
  return std::accumulate(ways.begin(), ways.end(), std::uint64_t{0});
}

bool realizes(const IntervalPresentation& p, const Matroid& m) {
  if (p.size() != m.size() || p.rank() != m.rank()) return false;
  if (count_bases(p) != m.basis_count()) return false;
  const auto& js = p.intervals();
  for (ElementSet b : m.bases()) {
    Mask positions = 0;
    for (int e : b) positions |= Mask{1} << p.position_of(e);
    int i = 0;
    for (int q : ElementSet(positions)) {
      if (q < js[i].lo || q > js[i].hi) return false;
      ++i;
    }
  }
  return true;
}

bool presentation_connected(const IntervalPresentation& p) {
  const auto& js = p.intervals();
  if (js.empty()) return p.size() <= 1;
  if (js.front().lo != 0 || js.back().hi != p.size() - 1) return false;
  for (std::size_t i = 0; i + 1 < js.size(); ++i) {
    if (js[i + 1].lo > js[i].hi) return false;
  }
  return true;
}

IntervalPresentation contract_presentation(const IntervalPresentation& p, int y) {
  if (y < 0 || y >= p.size()) throw Error(ErrorCode::kOutOfRange, "element out of range");
  const int q = p.position_of(y);
  const auto& js = p.intervals();
  const int r = p.rank();
  int s = -1, t = -1;
  for (int i = 0; i < r; ++i) {
    if (js[i].lo <= q && q <= js[i].hi) {
      if (s < 0) s = i;
      t = i;
    }
  }
  if (s < 0) {
    throw Error(ErrorCode::kLoopContraction, "element " + std::to_string(y) + " is a loop");
  }
  std::vector<Interval> out;
  for (int i = 0; i < s; ++i) out.push_back(js[i]);
  // Merge consecutive pairs J_i u J_{i+1} for s <= i < t; each contains q
  // strictly inside, so removing q shortens the right end.
  for (int i = s; i < t; ++i) out.push_back({js[i].lo, js[i + 1].hi - 1});
  for (int i = t + 1; i < r; ++i) out.push_back({js[i].lo - 1, js[i].hi - 1});
  return IntervalPresentation::create(p.size() - 1, std::move(out), order_without(p.order(), q));
}

IntervalPresentation delete_terminal_presentation(const IntervalPresentation& p,
                                                  Terminal end) {
  const int n = p.size();
  const int r = p.rank();
  const auto& js = p.intervals();
  std::vector<Interval> out;
  if (end == Terminal::kFirst) {
    if (n == 0 || r == 0 || js.front().lo != 0) {
      throw Error(ErrorCode::kLoopDeletion, "first element is a loop");
    }
    if (js.front().hi == 0) {
      for (int i = 1; i < r; ++i) out.push_back({js[i].lo - 1, js[i].hi - 1});
    } else {
      // Remove the i-th element of the order from J_i.
      for (int i = 0; i < r; ++i) {
        const int lo = js[i].lo == i ? i + 1 : js[i].lo;
        out.push_back({lo - 1, js[i].hi - 1});
      }
    }
    return IntervalPresentation::create(n - 1, std::move(out), order_without(p.order(), 0));
  }
  if (n == 0 || r == 0 || js.back().hi != n - 1) {
    throw Error(ErrorCode::kLoopDeletion, "last element is a loop");
  }
  if (js.back().lo == n - 1) {
    out.assign(js.begin(), js.end() - 1);
  } else {
    for (int i = 0; i < r; ++i) {
      const int mirrored = n - r + i;
      out.push_back({js[i].lo, js[i].hi == mirrored ? js[i].hi - 1 : js[i].hi});
    }
  }
  return IntervalPresentation::create(n - 1, std::move(out), order_without(p.order(), n - 1));
}

std::vector<std::pair<ElementSet, int>> fundamental_flats_from_presentation(
    const IntervalPresentation& p) {
  if (!presentation_connected(p)) {
    throw Error(ErrorCode::kNotConnected, "presentation is not connected");
  }
  const auto& js = p.intervals();
  const int n = p.size();
  const int r = p.rank();
  std::vector<std::pair<ElementSet, int>> out;
  for (int i = 0; i + 1 < r; ++i) {
    if (js[i + 1].lo - 1 > js[i].lo) {
      out.emplace_back(p.elements_between(0, js[i + 1].lo - 1), i + 1);
    }
  }
  for (int i = 0; i + 1 < r; ++i) {
    if (js[i].hi + 1 < js[i + 1].hi) {
      out.emplace_back(p.elements_between(js[i].hi + 1, n - 1), r - (i + 1));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string diagram(const IntervalPresentation& p) {
  const int n = p.size();
  const int r = p.rank();
  const auto& js = p.intervals();
  std::string lower(n, 'E'), upper(n, 'E');
  for (const Interval& j : js) {
    lower[j.lo] = 'N';
    upper[j.hi] = 'N';
  }
  std::ostringstream out;
  out << "lower " << lower << "\n";
  out << "upper " << upper << "\n";
  // Row y lists the lattice points (x, y) between the two paths, top row
  // first; x runs from 0 to n - r.
  for (int y = r; y >= 0; --y) {
    const int left = y == 0 ? 0 : js[y - 1].lo - y + 1;
    const int right = y == r ? n - r : js[y].hi - y;
    std::string row;
    for (int x = 0; x <= n - r; ++x) row += (x >= left && x <= right) ? 'o' : '.';
    out << row << "\n";
  }
  return out.str();
}

}  // namespace latmat
