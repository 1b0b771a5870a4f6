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

#ifndef LATMAT_ELEMENT_SET_H_
#define LATMAT_ELEMENT_SET_H_

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

namespace latmat {

using Mask = std::uint32_t;

// Hard cap on ground-set size. Every matroid stores a rank table with
// 2^n entries, and the exhaustive searches are only meant for desk-scale
// instances.
inline constexpr int kMaxElements = 12;

// A subset of {0, ..., n-1} stored as a bitmask. Iteration yields members
// in increasing order.
class ElementSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    constexpr iterator() = default;
    constexpr explicit iterator(Mask rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator copy = *this;
      ++*this;
      return copy;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    Mask rest_ = 0;
  };

  constexpr ElementSet() = default;
  constexpr explicit ElementSet(Mask bits) : bits_(bits) {}
  ElementSet(std::initializer_list<int> elements);

  static ElementSet from_elements(const std::vector<int>& elements);
  // {0, ..., n-1}.
  static constexpr ElementSet first(int n) {
    return ElementSet(n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1);
  }
  static constexpr ElementSet singleton(int e) { return ElementSet(Mask{1} << e); }

  constexpr Mask bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int e) const { return (bits_ >> e) & 1u; }
  constexpr bool is_subset_of(ElementSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool is_proper_subset_of(ElementSet other) const {
    return is_subset_of(other) && bits_ != other.bits_;
  }
  constexpr bool intersects(ElementSet other) const {
    return (bits_ & other.bits_) != 0;
  }
  constexpr ElementSet with(int e) const { return ElementSet(bits_ | (Mask{1} << e)); }
  constexpr ElementSet without(int e) const { return ElementSet(bits_ & ~(Mask{1} << e)); }
  // Smallest member; -1 when empty.
  constexpr int min_element() const { return bits_ ? std::countr_zero(bits_) : -1; }
  constexpr int max_element() const { return bits_ ? 31 - std::countl_zero(bits_) : -1; }

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<int> elements() const;
  // "{0,1,2}" style rendering.
  std::string to_string() const;

  friend constexpr ElementSet operator|(ElementSet a, ElementSet b) {
    return ElementSet(a.bits_ | b.bits_);
  }
  friend constexpr ElementSet operator&(ElementSet a, ElementSet b) {
    return ElementSet(a.bits_ & b.bits_);
  }
  friend constexpr ElementSet operator-(ElementSet a, ElementSet b) {
    return ElementSet(a.bits_ & ~b.bits_);
  }
  friend constexpr bool operator==(ElementSet a, ElementSet b) = default;
  // Numeric order on the bitmask; used for storage, not for display.
  friend constexpr auto operator<=>(ElementSet a, ElementSet b) {
    return a.bits_ <=> b.bits_;
  }

 private:
  Mask bits_ = 0;
};

// Lexicographic order on sorted member lists ({0,1,5} < {0,2}).
bool lex_less(ElementSet a, ElementSet b);

// All k-element subsets of `within`, in increasing bitmask order.
std::vector<ElementSet> subsets_of_size(ElementSet within, int k);

}  // namespace latmat

#endif  // LATMAT_ELEMENT_SET_H_
