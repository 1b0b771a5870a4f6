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

#include <json.hpp>

#include "latmat/catalog.h"
#include "latmat/flats.h"
#include "latmat/io.h"
#include "test_util.h"

namespace latmat {
namespace {

using testing::small_corpus;

ErrorCode code_of(const std::string& text) {
  try {
    parse_any(text);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("parsed: " << text);
  return ErrorCode::kParse;
}

TEST_CASE("matroid files round-trip") {
  for (const Matroid& m : small_corpus()) {
    const std::string text = format_matroid(m);
    REQUIRE(parse_matroid(text) == m);
    CHECK(format_matroid(parse_matroid(text)) == text);
  }
}

TEST_CASE("canonical serialization sorts bases lexicographically") {
  // {0,1,5} precedes {0,2,3} although its bitmask is larger.
  const std::string text = format_matroid(uniform(3, 6));
  CHECK(text.rfind("MATROID 6 3\n0 1 2\n0 1 3\n0 1 4\n0 1 5\n0 2 3\n", 0) == 0);
  CHECK(format_matroid(uniform(0, 2)) == "MATROID 2 0\n");
  CHECK(parse_matroid("MATROID 2 0\n") == uniform(0, 2));
}

TEST_CASE("comments and blank lines are skipped") {
  const std::string text =
      "# the uniform matroid U1,2\n"
      "\n"
      "MATROID 2 1\n"
      "  # first basis\n"
      "0\n"
      "\n"
      "1\n";
  CHECK(parse_matroid(text) == uniform(1, 2));
}

TEST_CASE("malformed matroid files") {
  CHECK(code_of("") == ErrorCode::kParse);
  CHECK(code_of("MATROID 3\n0\n") == ErrorCode::kParse);
  CHECK(code_of("MATRIX 2 1\n0\n") == ErrorCode::kParse);
  CHECK(code_of("MATROID 3 2\n0 1 2\n") == ErrorCode::kParse);
  CHECK(code_of("MATROID 3 2\n1 0\n") == ErrorCode::kParse);
  CHECK(code_of("MATROID 3 2\n0 3\n") == ErrorCode::kParse);
  CHECK(code_of("MATROID 3 2\n0 x\n") == ErrorCode::kParse);
  CHECK(code_of("MATROID 3 4\n") == ErrorCode::kParse);
  CHECK(code_of("MATROID 13 1\n0\n") == ErrorCode::kGroundTooLarge);
  CHECK(code_of("MATROID 4 2\n0 1\n2 3\n") == ErrorCode::kAxiomViolation);
  CHECK(code_of("MATROID 3 1\n") == ErrorCode::kEmptyFamily);
}

TEST_CASE("presentation files round-trip") {
  Rng rng(41);
  for (int i = 0; i < 100; ++i) {
    const IntervalPresentation p = random_presentation(rng, 9);
    const std::string text = format_presentation(p);
    REQUIRE(parse_presentation(text) == p);
  }
  const IntervalPresentation p3 = parse_presentation("LPM 6 3\n0 2\n1 4\n3 5\n");
  CHECK(realize(p3) == p_n(3));
  const auto any = parse_any("# P3\nLPM 6 3\n0 2\n1 4\n3 5\nORDER 5 4 3 2 1 0\n");
  REQUIRE(std::holds_alternative<IntervalPresentation>(any));
  CHECK(std::get<IntervalPresentation>(any).element_at(0) == 5);
}

TEST_CASE("malformed presentation files") {
  CHECK(code_of("LPM 4 2\n0 1\n") == ErrorCode::kParse);
  CHECK(code_of("LPM 4 1\n0 1 2\n") == ErrorCode::kParse);
  CHECK(code_of("LPM 4 1\n0 1\nORDER 0 1 2\n") == ErrorCode::kParse);
  CHECK(code_of("LPM 4 1\nORDER 0 1 2 3\n0 1\n") == ErrorCode::kParse);
  CHECK(code_of("LPM 4 2\n0 1\n0 3\n") == ErrorCode::kInvalidPresentation);
  CHECK(code_of("LPM 3 1\n0 1\nORDER 0 0 1\n") == ErrorCode::kInvalidPresentation);
}

TEST_CASE("flats JSON keys") {
  const Matroid p3 = p_n(3);
  const nlohmann::json j = nlohmann::json::parse(flats_json(p3, flats_report(p3)));
  CHECK(j["n"] == 6);
  CHECK(j["rank"] == 3);
  CHECK(j["bases"].size() == 18);
  CHECK(j["bases"][0] == nlohmann::json({0, 1, 3}));
  CHECK(j["flats"].size() == flats_report(p3).entries.size());
  bool found = false;
  for (const auto& f : j["flats"]) {
    for (const char* key : {"flat", "rank", "nullity", "connected", "cyclic", "pnc",
                            "reducible", "fundamental"}) {
      REQUIRE(f.contains(key));
    }
    if (f["flat"] == nlohmann::json({3, 4, 5})) {
      found = true;
      CHECK(f["rank"] == 2);
      CHECK(f["pnc"] == true);
      CHECK(f["fundamental"] == true);
      CHECK(f["reducible"] == false);
    }
  }
  CHECK(found);
}

TEST_CASE("theorem JSON") {
  TheoremReport report = theorem_check({wheel3(), uniform(2, 4)});
  report.corpus_spec = "test";
  const nlohmann::json j = nlohmann::json::parse(theorem_json(report));
  CHECK(j["corpus"] == "test");
  CHECK(j["total"] == 2);
  CHECK(j["in_class"] == 1);
  CHECK(j["not_in_class"] == 1);
  CHECK(j["by_size"]["4"] == 1);
  CHECK(j["by_size"]["6"] == 1);
  CHECK(j["disagreements"].empty());
}

TEST_CASE("witness lines name the pattern and both sets") {
  const MinorWitness w{"W3", ElementSet{6}, ElementSet{}, {0, 1, 2, 3, 4, 5}};
  CHECK(format_witness(w) == "W3 delete {6} contract {} map 0->0 1->1 2->2 3->3 4->4 5->5");
}

}  // namespace
}  // namespace latmat
