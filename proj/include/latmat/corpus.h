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

#ifndef LATMAT_CORPUS_H_
#define LATMAT_CORPUS_H_

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "latmat/matroid.h"
#include "latmat/presentation.h"

namespace latmat {

enum class Generator {
  kRandomTransversal,
  kRandomSparsePaving,
  kCatalogMinors,
  kLpmRandom,
  kDualsClosure,
};

const char* generator_name(Generator g);

// Which generators to run and with what parameters. Parsed from a
// comma-separated list such as
//   random-transversal,lpm-random,duals-closure,count=500,max-n=8,seed=7
// Keys apply to every generator. duals-closure always runs last, whatever
// its position in the list.
struct CorpusSpec {
  std::vector<Generator> generators;
  int count = 100;
  int max_n = 8;
  std::optional<std::uint64_t> seed;

  static CorpusSpec parse(const std::string& text);
  // Canonical spelling, embedded in reports.
  std::string to_string() const;
  bool needs_seed() const;
};

// Deterministic stream: std::mt19937_64 (fully specified by the standard)
// seeded with seed + 0x9E3779B97F4A7C15 * (generator index + 1), with
// bounded draws by rejection sampling so results do not depend on the
// standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  // Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound);
  int between(int lo, int hi) { return lo + static_cast<int>(below(hi - lo + 1)); }
  bool coin() { return (engine_() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

// Transversal matroid of a set system on {0, ..., n-1}; independence of a
// set is decided by augmenting-path bipartite matching.
Matroid transversal_matroid(int n, const std::vector<ElementSet>& sets);

IntervalPresentation random_presentation(Rng& rng, int max_n);

// All minors of the catalog members with at most 8 elements, including the
// members themselves, deduplicated up to isomorphism.
std::vector<Matroid> catalog_minors(int max_n);

// Appends the dual of every member, skipping isomorphic repeats (the input
// is deduplicated too).
std::vector<Matroid> with_duals(const std::vector<Matroid>& members);

// Members in generation order, deduplicated by canonical form. Each random
// generator keeps drawing until it contributes `count` new members or runs
// out of attempts. Throws BadSpec when a random generator has no seed.
std::vector<Matroid> generate(const CorpusSpec& spec);

}  // namespace latmat

#endif  // LATMAT_CORPUS_H_
