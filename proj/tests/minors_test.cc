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


#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "latmat/catalog.h"
#include "latmat/constructions.h"
#include "latmat/io.h"
#include "latmat/minors.h"
#include "test_util.h"

namespace latmat {
namespace {

using testing::brute_isomorphic;
using testing::small_corpus;

// Tries every (delete, contract, keep) assignment.
bool brute_has_minor(const Matroid& host, const Matroid& pattern) {
  const int keep = pattern.size();
  for (ElementSet kept : subsets_of_size(host.ground(), keep)) {
    const ElementSet rest = host.ground() - kept;
    for (Mask bits = rest.bits();; bits = (bits - 1) & rest.bits()) {
      const ElementSet con(bits);
      if (brute_isomorphic(minor(host, rest - con, con).matroid, pattern)) return true;
      if (bits == 0) break;
    }
  }
  return false;
}

// The witness maps pattern bases onto bases of the host minor.
void check_witness(const Matroid& host, const Matroid& pattern, const MinorWitness& w) {
  CHECK_FALSE(w.deleted.intersects(w.contracted));
  const Relabeled m = minor(host, w.deleted, w.contracted);
  REQUIRE(m.matroid.size() == pattern.size());
  CHECK(m.matroid.basis_count() == pattern.basis_count());
  for (ElementSet b : pattern.bases()) {
    ElementSet image;
    for (int e : b) image = image.with(w.iso[e]);
    CHECK(m.matroid.is_basis(m.image_of(image)));
  }
}

std::vector<Matroid> patterns() {
  return {uniform(1, 2), uniform(2, 3), uniform(2, 4), p_n(2), uniform(1, 3),
          direct_sum(uniform(1, 2), uniform(1, 1))};
}

std::vector<Matroid> hosts(int max_n, std::size_t limit) {
  std::vector<Matroid> out;
  for (const Matroid& m : small_corpus()) {
    if (m.size() >= 3 && m.size() <= max_n && out.size() < limit) out.push_back(m);
  }
  return out;
}

TEST_CASE("wheel3 has a U2,3 minor") {
  const auto w = has_minor(wheel3(), uniform(2, 3), "U2,3");
  REQUIRE(w.has_value());
  CHECK(w->pattern == "U2,3");
  CHECK(w->contracted.size() == 1);
  CHECK(w->deleted.size() == 2);
  check_witness(wheel3(), uniform(2, 3), *w);
}

TEST_CASE("small minor searches") {
  CHECK_FALSE(has_minor(uniform(2, 4), p_n(2)).has_value());
  const auto self = has_minor(p_n(3), p_n(3));
  REQUIRE(self.has_value());
  CHECK(self->deleted.empty());
  CHECK(self->contracted.empty());
  check_witness(p_n(3), p_n(3), *self);
  CHECK_FALSE(has_minor(uniform(2, 3), uniform(2, 4)).has_value());
}

TEST_CASE("minor search agrees with exhaustive assignment") {
  for (const Matroid& host : hosts(7, 60)) {
    for (const Matroid& pattern : patterns()) {
      if (pattern.size() > host.size()) continue;
      const auto w = has_minor(host, pattern);
      REQUIRE(w.has_value() == brute_has_minor(host, pattern));
      if (w) check_witness(host, pattern, *w);
    }
  }
}

TEST_CASE("minor containment is transitive") {
  for (const Matroid& a : hosts(7, 40)) {
    for (int e = 0; e < a.size(); ++e) {
      const Matroid b = contraction(a, {e}).matroid;
      for (const Matroid& c : patterns()) {
        if (has_minor(b, c)) CHECK(has_minor(a, c).has_value());
      }
    }
  }
}

TEST_CASE("minor containment commutes with duality") {
  for (const Matroid& host : hosts(7, 60)) {
    for (const Matroid& pattern : patterns()) {
      CHECK(has_minor(host, pattern).has_value() ==
            has_minor(dual(host), dual(pattern)).has_value());
    }
  }
}

TEST_CASE("catalog minor search") {
  const auto w = find_catalog_minor(direct_sum(wheel3(), uniform(1, 1)));
  REQUIRE(w.has_value());
  CHECK(w->pattern == "W3");
  CHECK((w->deleted | w->contracted) == ElementSet{6});
  check_witness(direct_sum(wheel3(), uniform(1, 1)), wheel3(), *w);
  CHECK_FALSE(find_catalog_minor(p_n(4)).has_value());
  const auto e4 = find_catalog_minor(e_n(4));
  REQUIRE(e4.has_value());
  CHECK(e4->pattern == "E4");
  CHECK(is_lpm_via_excluded_minors(uniform(3, 7)));
  CHECK_FALSE(is_lpm_via_excluded_minors(whirl3()));
  CHECK(is_lpm_via_excluded_minors(uniform(1, 5)));
}

TEST_CASE("realized presentations avoid the catalog") {
  Rng rng(31);
  for (int i = 0; i < 60; ++i) {
    const Matroid m = realize(random_presentation(rng, 8));
    REQUIRE(is_lpm_via_excluded_minors(m));
  }
}

TEST_CASE("recognize_with_excluded_minors witnesses") {
  const RecognitionResult r = recognize_with_excluded_minors(whirl3());
  CHECK_FALSE(r.verdict);
  REQUIRE(std::holds_alternative<MinorWitness>(r.witness));
  CHECK(std::get<MinorWitness>(r.witness).pattern == "Whirl3");
  CHECK(recognize_with_excluded_minors(p_n(3)).verdict);
}

TEST_CASE("theorem check on tiny corpora") {
  const TheoremReport w3 = theorem_check({wheel3()});
  CHECK(w3.total == 1);
  CHECK(w3.not_in_class == 1);
  CHECK(w3.disagreements.empty());
  const TheoremReport u24 = theorem_check({uniform(2, 4)});
  CHECK(u24.in_class == 1);
  CHECK(u24.disagreements.empty());
}

TEST_CASE("theorem check does not depend on the worker count") {
  const std::vector<Matroid>& corpus = small_corpus();
  const std::string one = theorem_json(theorem_check(corpus, 1));
  const std::string three = theorem_json(theorem_check(corpus, 3));
  CHECK(one == three);
  CHECK(theorem_check(corpus).disagreements.empty());
}

}  // namespace
}  // namespace latmat
