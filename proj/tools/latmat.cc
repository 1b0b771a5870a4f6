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


// latmat: command-line front end.
//
//   latmat gen --family <name> [-o file]
//   latmat info <file> [--json]
//   latmat realize <file> [-o file]
//   latmat recognize --method oracle|flats|minors <file>
//   latmat minor --pattern <file> <hostfile>
//   latmat diagram <file>
//   latmat verify-catalog --max-size <m>
//   latmat verify-theorem --corpus <spec> [--seed s] [--count c] [--max-n n] [--json]
//
// Exit status: 0 success or positive verdict, 1 negative verdict, 2 error.

#include <iostream>
#include <optional>
#include <string>
#include <variant>

#include <CLI11.hpp>

#include "latmat/catalog.h"
#include "latmat/corpus.h"
#include "latmat/flats.h"
#include "latmat/io.h"
#include "latmat/lpm.h"
#include "latmat/minors.h"

namespace {

using namespace latmat;

constexpr int kTrue = 0;
constexpr int kFalse = 1;
constexpr int kError = 2;

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
  } else {
    write_file(path, text);
  }
}

int run_gen(const std::string& family, const std::string& out) {
  emit(format_matroid(family_by_name(family).matroid), out);
  return kTrue;
}

int run_info(const std::string& file, bool json) {
  const Matroid m = load_matroid(file);
  const FlatsReport report = flats_report(m);
  std::cout << (json ? flats_json(m, report) : flats_table(m, report));
  return kTrue;
}

int run_realize(const std::string& file, const std::string& out) {
  emit(format_matroid(realize(parse_presentation(read_file(file)))), out);
  return kTrue;
}

int run_recognize(const std::string& method, const std::string& file) {
  const Matroid m = load_matroid(file);
  RecognitionResult result;
  if (method == "oracle") {
    result = recognize_with_oracle(m);
  } else if (method == "flats") {
    result = is_lpm_char(m);
  } else {
    result = recognize_with_excluded_minors(m);
  }
  std::cout << format_recognition(result);
  return result.verdict ? kTrue : kFalse;
}

int run_minor(const std::string& pattern_file, const std::string& host_file) {
  const Matroid pattern = load_matroid(pattern_file);
  const Matroid host = load_matroid(host_file);
  if (auto witness = has_minor(host, pattern, pattern_file)) {
    std::cout << "minor " << format_witness(*witness) << '\n';
    return kTrue;
  }
  std::cout << "no minor\n";
  return kFalse;
}

int run_diagram(const std::string& file) {
  auto parsed = parse_any(read_file(file));
  std::optional<IntervalPresentation> p;
  if (auto* given = std::get_if<IntervalPresentation>(&parsed)) {
    p = *given;
  } else {
    p = find_path_order(std::get<Matroid>(parsed));
  }
  if (!p) {
    std::cout << "not a lattice path matroid\n";
    return kFalse;
  }
  std::cout << format_presentation(*p) << diagram(*p);
  return kTrue;
}

int run_verify_catalog(int max_size) {
  bool all = true;
  for (const CatalogEntry& entry : catalog_up_to(max_size)) {
    const ExcludedMinorReport report = verify_excluded_minor(entry.matroid);
    all = all && report.is_excluded_minor;
    std::cout << (report.is_excluded_minor ? "PASS " : "FAIL ") << entry.name << "  n "
              << entry.matroid.size() << "  rank " << entry.matroid.rank() << '\n';
  }
  return all ? kTrue : kFalse;
}

struct TheoremFlags {
  std::string corpus;
  std::optional<std::uint64_t> seed;
  std::optional<int> count;
  std::optional<int> max_n;
  int workers = 1;
  bool json = false;
};

int run_verify_theorem(const TheoremFlags& flags) {
  CorpusSpec spec = CorpusSpec::parse(flags.corpus);
  if (flags.seed) spec.seed = flags.seed;
  if (flags.count) spec.count = *flags.count;
  if (flags.max_n) spec.max_n = *flags.max_n;
  if (spec.max_n > OracleOptions{}.max_elements) {
    throw Error(ErrorCode::kGroundTooLarge, "max-n is limited to 9 for the oracle");
  }
  if (spec.needs_seed() && !spec.seed) {
    throw Error(ErrorCode::kBadSpec, "randomized corpus needs --seed or seed=");
  }
  TheoremReport report = theorem_check(generate(spec), flags.workers);
  report.corpus_spec = spec.to_string();
  std::cout << (flags.json ? theorem_json(report) : theorem_text(report));
  return report.disagreements.empty() ? kTrue : kFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lattice path matroid toolkit", "latmat"};
  app.require_subcommand(1);

  std::string family, out, file, method, pattern;
  bool json = false;
  int max_size = 8;
  TheoremFlags theorem;

  auto* gen = app.add_subcommand("gen", "write a catalog or uniform matroid");
  gen->add_option("--family", family, "A3, B2,2, C4,2, D4, E4, W3, Whirl3, R3, R4, P3, "
                                      "Pprime3, U2,4, ...")
      ->required();
  gen->add_option("-o,--output", out, "output file (default stdout)");

  auto* info = app.add_subcommand("info", "classify the flats of a matroid");
  info->add_option("file", file)->required();
  info->add_flag("--json", json, "machine-readable output");

  auto* realize_cmd = app.add_subcommand("realize", "presentation file to matroid file");
  realize_cmd->add_option("file", file)->required();
  realize_cmd->add_option("-o,--output", out, "output file (default stdout)");

  auto* recognize = app.add_subcommand("recognize", "decide lattice path membership");
  recognize->add_option("--method", method)
      ->required()
      ->check(CLI::IsMember({"oracle", "flats", "minors"}));
  recognize->add_option("file", file)->required();

  auto* minor_cmd = app.add_subcommand("minor", "search a host for a minor");
  minor_cmd->add_option("--pattern", pattern)->required();
  minor_cmd->add_option("host", file)->required();

  auto* diagram_cmd = app.add_subcommand("diagram", "draw the lattice path region");
  diagram_cmd->add_option("file", file)->required();

  auto* catalog = app.add_subcommand("verify-catalog", "check catalog minimality");
  catalog->add_option("--max-size", max_size)->check(CLI::Range(6, 9));

  auto* verify = app.add_subcommand("verify-theorem", "cross-check the three recognizers");
  verify->add_option("--corpus", theorem.corpus,
                     "generators and keys, e.g. lpm-random,duals-closure,count=500")
      ->required();
  verify->add_option("--seed", theorem.seed, "overrides seed= in the corpus");
  verify->add_option("--count", theorem.count, "overrides count=")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--max-n", theorem.max_n, "overrides max-n=")->check(CLI::Range(1, 9));
  verify->add_option("--workers", theorem.workers, "threads")->check(CLI::Range(1, 64));
  verify->add_flag("--json", theorem.json, "machine-readable report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    if (code == 0) return kTrue;
    std::cerr << app.help();
    return kError;
  }

  try {
    if (*gen) return run_gen(family, out);
    if (*info) return run_info(file, json);
    if (*realize_cmd) return run_realize(file, out);
    if (*recognize) return run_recognize(method, file);
    if (*minor_cmd) return run_minor(pattern, file);
    if (*diagram_cmd) return run_diagram(file);
    if (*catalog) return run_verify_catalog(max_size);
    if (*verify) return run_verify_theorem(theorem);
  } catch (const std::exception& e) {
    std::cerr << "latmat: " << e.what() << '\n';
    return kError;
  }
  return kError;
}
