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

#include "latmat/element_set.h"

#include <algorithm>

namespace latmat {

ElementSet::ElementSet(std::initializer_list<int> elements) {
  for (int e : elements) bits_ |= Mask{1} << e;
}

ElementSet ElementSet::from_elements(const std::vector<int>& elements) {
  ElementSet s;
  for (int e : elements) s = s.with(e);
  return s;
}

std::vector<int> ElementSet::elements() const { return {begin(), end()}; }

std::string ElementSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int e : *this) {
    if (!first) out += ',';
    out += std::to_string(e);
    first = false;
  }
  out += '}';
  return out;
}

bool lex_less(ElementSet a, ElementSet b) {
  auto ia = a.begin(), ib = b.begin();
  for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
    if (*ia != *ib) return *ia < *ib;
  }
  return ia == a.end() && ib != b.end();
}

std::vector<ElementSet> subsets_of_size(ElementSet within, int k) {
  std::vector<ElementSet> out;
  if (k < 0 || k > within.size()) return out;
  // Enumerate submasks in increasing order.
  const Mask full = within.bits();
  Mask sub = 0;
  while (true) {
    if (std::popcount(sub) == k) out.emplace_back(sub);
    if (sub == full) break;
    sub = (sub - full) & full;
  }
  return out;
}

}  // namespace latmat
