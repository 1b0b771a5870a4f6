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

#include "latmat/isomorphism.h"

#include <algorithm>
#include <climits>
#include <numeric>
#include <utility>

namespace latmat {

ElementSet permute(const Permutation& p, ElementSet s) {
  ElementSet out;
  for (int e : s) out = out.with(p[e]);
  return out;
}

namespace {

// counts(e, f) = number of bases containing both e and f; the diagonal is
// the number of bases containing e.
class Cooccurrence {
 public:
  explicit Cooccurrence(const Matroid& m) : n_(m.size()), counts_(n_ * n_, 0) {
    for (ElementSet b : m.bases()) {
      for (int e : b) {
        for (int f : b) ++counts_[e * n_ + f];
      }
    }
  }
  int operator()(int e, int f) const { return counts_[e * n_ + f]; }

 private:
  int n_;
  std::vector<int> counts_;
};

using Coloring = std::vector<int>;

int color_count(const Coloring& colors) {
  return colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()) + 1;
}

// Splits cells until every element of a cell sees the same multiset of
// (neighbor color, co-occurrence) pairs. Keeps the relative order of
// existing cells, so the result is label-independent.
Coloring refine(const Cooccurrence& co, Coloring colors) {
  const int n = static_cast<int>(colors.size());
  int count = color_count(colors);
  std::vector<std::vector<int>> signature(n);
  std::vector<std::pair<int, int>> seen;
  std::vector<int> order(n);
  while (true) {
    for (int e = 0; e < n; ++e) {
      seen.clear();
      for (int f = 0; f < n; ++f) {
        if (f != e) seen.emplace_back(colors[f], co(e, f));
      }
      std::sort(seen.begin(), seen.end());
      auto& sig = signature[e];
      sig.assign({colors[e], co(e, e)});
      for (auto [c, k] : seen) {
        sig.push_back(c);
        sig.push_back(k);
      }
    }
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return signature[a] < signature[b]; });
    Coloring next(n);
    int color = 0;
    for (int i = 0; i < n; ++i) {
      if (i > 0 && signature[order[i]] != signature[order[i - 1]]) ++color;
      next[order[i]] = color;
    }
    const int next_count = n == 0 ? 0 : color + 1;
    if (next_count == count) return next;
    colors = std::move(next);
    count = next_count;
  }
}

Coloring individualize(const Coloring& colors, int v) {
  const int t = colors[v];
  Coloring out(colors);
  for (std::size_t e = 0; e < out.size(); ++e) {
    if (colors[e] > t || (colors[e] == t && static_cast<int>(e) != v)) ++out[e];
  }
  return out;
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Matroid& m) : m_(m), co_(m), n_(m.size()) {}

  CanonicalLabeling run() {
    std::vector<int> prefix;
    visit(refine(co_, Coloring(n_, 0)), prefix);
    CanonicalLabeling out;
    out.form.push_back(static_cast<char>(n_));
    out.form.push_back(static_cast<char>(m_.rank()));
    for (Mask b : best_code_) {
      out.form.push_back(static_cast<char>(b & 0xff));
      out.form.push_back(static_cast<char>(b >> 8));
    }
    out.position = best_leaf_;
    return out;
  }

 private:
  static constexpr int kNoJump = INT_MAX;

  std::vector<Mask> encode(const Coloring& leaf) const {
    std::vector<Mask> code;
    code.reserve(m_.basis_count());
    for (ElementSet b : m_.bases()) code.push_back(permute(leaf, b).bits());
    std::sort(code.begin(), code.end());
    return code;
  }

  // sigma = a^{-1} o b.
  Permutation between(const Coloring& a, const Coloring& b) const {
    Permutation inverse_a(n_), sigma(n_);
    for (int e = 0; e < n_; ++e) inverse_a[a[e]] = e;
    for (int e = 0; e < n_; ++e) sigma[e] = inverse_a[b[e]];
    return sigma;
  }

  int visit(const Coloring& colors, std::vector<int>& prefix) {
    const int depth = static_cast<int>(prefix.size());
    if (color_count(colors) == n_) return leaf(colors, prefix);

    // First non-singleton cell.
    std::vector<int> size(n_, 0);
    for (int c : colors) ++size[c];
    int target = 0;
    while (size[target] < 2) ++target;
    std::vector<int> cell;
    for (int e = 0; e < n_; ++e) {
      if (colors[e] == target) cell.push_back(e);
    }

    std::vector<int> explored;
    for (int v : cell) {
      if (!explored.empty() && equivalent_to_explored(v, explored, prefix)) continue;
      prefix.push_back(v);
      const int jump = visit(refine(co_, individualize(colors, v)), prefix);
      prefix.pop_back();
      explored.push_back(v);
      if (jump < depth) return jump;
    }
    return kNoJump;
  }

  int leaf(const Coloring& colors, const std::vector<int>& prefix) {
    std::vector<Mask> code = encode(colors);
    if (first_leaf_.empty()) {
      first_leaf_ = colors;
      first_path_ = prefix;
      first_code_ = code;
      best_leaf_ = colors;
      best_code_ = std::move(code);
      return kNoJump;
    }
    if (code == first_code_) {
      automorphisms_.push_back(between(first_leaf_, colors));
      std::size_t common = 0;
      while (common < prefix.size() && common < first_path_.size() &&
             prefix[common] == first_path_[common]) {
        ++common;
      }
      return static_cast<int>(common);
    }
    if (code < best_code_) {
      best_code_ = std::move(code);
      best_leaf_ = colors;
    } else if (code == best_code_) {
      automorphisms_.push_back(between(best_leaf_, colors));
    }
    return kNoJump;
  }

  // Whether some known automorphism fixing the prefix pointwise maps v
  // into the orbit of an explored sibling.
  bool equivalent_to_explored(int v, const std::vector<int>& explored,
                              const std::vector<int>& prefix) const {
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int e) {
      while (parent[e] != e) e = parent[e] = parent[parent[e]];
      return e;
    };
    bool any = false;
    for (const Permutation& g : automorphisms_) {
      bool fixes = true;
      for (int p : prefix) fixes = fixes && g[p] == p;
      if (!fixes) continue;
      any = true;
      for (int e = 0; e < n_; ++e) parent[find(e)] = find(g[e]);
    }
    if (!any) return false;
    const int root = find(v);
    for (int w : explored) {
      if (find(w) == root) return true;
    }
    return false;
  }

  const Matroid& m_;
  Cooccurrence co_;
  int n_;
  Coloring first_leaf_;
  std::vector<int> first_path_;
  std::vector<Mask> first_code_;
  Coloring best_leaf_;
  std::vector<Mask> best_code_;
  std::vector<Permutation> automorphisms_;
};

}  // namespace

CanonicalLabeling canonical_labeling(const Matroid& m) {
  if (m.size() == 0) {
    CanonicalLabeling out;
    out.form = std::string(2, '\0');
    out.form.append(2, '\0');
    return out;
  }
  return CanonicalSearch(m).run();
}

std::string canonical_form(const Matroid& m) { return canonical_labeling(m).form; }

std::optional<Permutation> is_isomorphic(const Matroid& m1, const Matroid& m2) {
  if (m1.size() != m2.size() || m1.rank() != m2.rank() ||
      m1.basis_count() != m2.basis_count()) {
    return std::nullopt;
  }
  const CanonicalLabeling l1 = canonical_labeling(m1);
  const CanonicalLabeling l2 = canonical_labeling(m2);
  if (l1.form != l2.form) return std::nullopt;
  const int n = m1.size();
  Permutation inverse2(n), f(n);
  for (int e = 0; e < n; ++e) inverse2[l2.position[e]] = e;
  for (int e = 0; e < n; ++e) f[e] = inverse2[l1.position[e]];
  return f;
}

std::vector<Permutation> automorphisms(const Matroid& m) {
  const int n = m.size();
  const Cooccurrence co(m);
  const Coloring colors = refine(co, Coloring(n, 0));
  std::vector<std::uint8_t> is_basis(std::size_t{1} << n, 0);
  for (ElementSet b : m.bases()) is_basis[b.bits()] = 1;

  std::vector<Permutation> out;
  Permutation image(n, -1);
  std::vector<bool> used(n, false);
  auto extend = [&](auto& self, int e) -> void {
    if (e == n) {
      for (ElementSet b : m.bases()) {
        if (!is_basis[permute(image, b).bits()]) return;
      }
      out.push_back(image);
      return;
    }
    for (int f = 0; f < n; ++f) {
      if (used[f] || colors[f] != colors[e]) continue;
      bool consistent = true;
      for (int d = 0; d < e && consistent; ++d) consistent = co(d, e) == co(image[d], f);
      if (!consistent) continue;
      used[f] = true;
      image[e] = f;
      self(self, e + 1);
      used[f] = false;
    }
  };
  extend(extend, 0);
  return out;
}

}  // namespace latmat
