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


#include "latmat/io.h"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "latmat/constructions.h"

namespace latmat {

namespace {

using Json = nlohmann::ordered_json;

struct Line {
  int number;
  std::vector<std::string> tokens;
};

std::vector<Line> significant_lines(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  for (int number = 1; std::getline(in, raw); ++number) {
    std::istringstream words(raw);
    Line line{number, {}};
    for (std::string w; words >> w;) line.tokens.push_back(w);
    if (line.tokens.empty() || line.tokens.front()[0] == '#') continue;
    out.push_back(std::move(line));
  }
  return out;
}

[[noreturn]] void parse_error(int line, const std::string& what) {
  throw Error(ErrorCode::kParse, "line " + std::to_string(line) + ": " + what);
}

int to_int(const Line& line, const std::string& token) {
  if (token.empty() || token.size() > 6 ||
      !std::all_of(token.begin(), token.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    parse_error(line.number, "expected a non-negative integer, got '" + token + "'");
  }
  return std::stoi(token);
}

// Returns (n, r) from a "<keyword> <n> <r>" header.
std::pair<int, int> header(const std::vector<Line>& lines, const std::string& keyword) {
  if (lines.empty()) parse_error(1, "empty file");
  const Line& first = lines.front();
  if (first.tokens.size() != 3 || first.tokens[0] != keyword) {
    parse_error(first.number, "expected '" + keyword + " <n> <r>'");
  }
  const int n = to_int(first, first.tokens[1]);
  const int r = to_int(first, first.tokens[2]);
  if (n > kMaxElements) {
    throw Error(ErrorCode::kGroundTooLarge, std::to_string(n) + " elements exceeds the cap of " +
                                                std::to_string(kMaxElements));
  }
  if (r > n) parse_error(first.number, "rank exceeds the number of elements");
  return {n, r};
}

Json set_json(ElementSet s) { return Json(s.elements()); }

Json bases_json(const Matroid& m) {
  std::vector<ElementSet> bases = m.bases();
  std::sort(bases.begin(), bases.end(), lex_less);
  Json out = Json::array();
  for (ElementSet b : bases) out.push_back(set_json(b));
  return out;
}

}  // namespace

Matroid parse_matroid(const std::string& text) {
  const std::vector<Line> lines = significant_lines(text);
  const auto [n, r] = header(lines, "MATROID");
  std::vector<ElementSet> bases;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (static_cast<int>(line.tokens.size()) != r) {
      parse_error(line.number, "expected " + std::to_string(r) + " elements");
    }
    ElementSet b;
    int previous = -1;
    for (const std::string& token : line.tokens) {
      const int e = to_int(line, token);
      if (e >= n) parse_error(line.number, "element " + token + " out of range");
      if (e <= previous) parse_error(line.number, "elements must be strictly increasing");
      previous = e;
      b = b.with(e);
    }
    bases.push_back(b);
  }
  if (r == 0 && bases.empty()) bases.push_back(ElementSet());
  return Matroid::from_bases(n, std::move(bases));
}

IntervalPresentation parse_presentation(const std::string& text) {
  const std::vector<Line> lines = significant_lines(text);
  const auto [n, r] = header(lines, "LPM");
  std::vector<Interval> intervals;
  std::vector<int> order;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens.front() == "ORDER") {
      if (!order.empty() || n == 0) parse_error(line.number, "unexpected ORDER line");
      if (static_cast<int>(line.tokens.size()) != n + 1) {
        parse_error(line.number, "ORDER needs " + std::to_string(n) + " elements");
      }
      for (std::size_t j = 1; j < line.tokens.size(); ++j) {
        order.push_back(to_int(line, line.tokens[j]));
      }
      continue;
    }
    if (line.tokens.size() != 2 || !order.empty()) {
      parse_error(line.number, "expected '<a> <b>'");
    }
    intervals.push_back({to_int(line, line.tokens[0]), to_int(line, line.tokens[1])});
  }
  if (static_cast<int>(intervals.size()) != r) {
    parse_error(lines.front().number, "expected " + std::to_string(r) + " intervals");
  }
  return IntervalPresentation::create(n, std::move(intervals), std::move(order));
}

std::variant<Matroid, IntervalPresentation> parse_any(const std::string& text) {
  const std::vector<Line> lines = significant_lines(text);
  if (!lines.empty() && lines.front().tokens.front() == "LPM") return parse_presentation(text);
  return parse_matroid(text);
}

std::string format_matroid(const Matroid& m) {
  std::vector<ElementSet> bases = m.bases();
  std::sort(bases.begin(), bases.end(), lex_less);
  std::ostringstream out;
  out << "MATROID " << m.size() << ' ' << m.rank() << '\n';
  if (m.rank() == 0) return out.str();
  for (ElementSet b : bases) {
    const char* sep = "";
    for (int e : b) {
      out << sep << e;
      sep = " ";
    }
    out << '\n';
  }
  return out.str();
}

std::string format_presentation(const IntervalPresentation& p) {
  std::ostringstream out;
  out << "LPM " << p.size() << ' ' << p.rank() << '\n';
  for (const Interval& j : p.intervals()) out << j.lo << ' ' << j.hi << '\n';
  if (!p.has_identity_order()) {
    out << "ORDER";
    for (int e : p.order()) out << ' ' << e;
    out << '\n';
  }
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParse, "cannot read " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kParse, "cannot write " + path);
  out << contents;
}

Matroid load_matroid(const std::string& path) {
  auto parsed = parse_any(read_file(path));
  if (auto* p = std::get_if<IntervalPresentation>(&parsed)) return realize(*p);
  return std::get<Matroid>(std::move(parsed));
}

std::string format_set(ElementSet s) { return s.to_string(); }

std::string format_witness(const MinorWitness& w) {
  std::ostringstream out;
  out << w.pattern << " delete " << format_set(w.deleted) << " contract "
      << format_set(w.contracted) << " map";
  for (std::size_t i = 0; i < w.iso.size(); ++i) out << ' ' << i << "->" << w.iso[i];
  return out.str();
}

std::string format_recognition(const RecognitionResult& result) {
  std::ostringstream out;
  out << (result.verdict ? "lattice path matroid" : "not a lattice path matroid") << '\n';
  if (const auto* p = std::get_if<IntervalPresentation>(&result.witness)) {
    out << "order";
    for (int e : p->order()) out << ' ' << e;
    out << "\nintervals";
    for (const Interval& j : p->intervals()) out << " [" << j.lo << "," << j.hi << "]";
    out << '\n';
  } else if (const auto* v = std::get_if<ClauseViolation>(&result.witness)) {
    out << "clause " << clause_name(v->clause) << " fails on component "
        << format_set(v->component) << '\n';
    for (ElementSet f : v->flats) out << "  flat " << format_set(f) << '\n';
  } else if (const auto* w = std::get_if<MinorWitness>(&result.witness)) {
    out << "minor " << format_witness(*w) << '\n';
  } else {
    out << "no path order\n";
  }
  return out.str();
}

std::string flats_table(const Matroid& m, const FlatsReport& report) {
  std::ostringstream out;
  out << "n " << m.size() << "  rank " << m.rank() << "  bases " << m.basis_count() << '\n';
  out << "rank nullity conn cyc pnc red fund flat\n";
  auto mark = [](bool b) { return b ? "  y " : "  - "; };
  for (const FlatInfo& f : report.entries) {
    out << "  " << f.rank << "     " << f.nullity << "    " << mark(f.is_connected)
        << mark(f.is_cyclic) << mark(f.is_pnc) << mark(f.is_reducible) << mark(f.is_fundamental)
        << ' ' << format_set(f.flat) << '\n';
  }
  return out.str();
}

std::string flats_json(const Matroid& m, const FlatsReport& report) {
  Json out;
  out["n"] = m.size();
  out["rank"] = m.rank();
  out["bases"] = bases_json(m);
  Json flats = Json::array();
  for (const FlatInfo& f : report.entries) {
    flats.push_back({{"flat", set_json(f.flat)},
                     {"rank", f.rank},
                     {"nullity", f.nullity},
                     {"connected", f.is_connected},
                     {"cyclic", f.is_cyclic},
                     {"pnc", f.is_pnc},
                     {"reducible", f.is_reducible},
                     {"fundamental", f.is_fundamental}});
  }
  out["flats"] = std::move(flats);
  return out.dump(2) + "\n";
}

std::string theorem_json(const TheoremReport& report) {
  Json out;
  out["corpus"] = report.corpus_spec;
  out["total"] = report.total;
  out["in_class"] = report.in_class;
  out["not_in_class"] = report.not_in_class;
  Json by_size = Json::object();
  for (const auto& [size, count] : report.by_size) by_size[std::to_string(size)] = count;
  out["by_size"] = std::move(by_size);
  Json disagreements = Json::array();
  for (const TheoremDisagreement& d : report.disagreements) {
    disagreements.push_back({{"index", d.index},
                             {"n", d.matroid.size()},
                             {"bases", bases_json(d.matroid)},
                             {"oracle", d.verdicts.oracle},
                             {"characterization", d.verdicts.characterization},
                             {"excluded_minors", d.verdicts.excluded_minors}});
  }
  out["disagreements"] = std::move(disagreements);
  return out.dump(2) + "\n";
}

std::string theorem_text(const TheoremReport& report) {
  std::ostringstream out;
  out << "corpus        " << report.corpus_spec << '\n'
      << "members       " << report.total << '\n'
      << "in class      " << report.in_class << '\n'
      << "not in class  " << report.not_in_class << '\n';
  for (const auto& [size, count] : report.by_size) {
    out << "  n=" << size << "  " << count << '\n';
  }
  out << "disagreements " << report.disagreements.size() << '\n';
  for (const TheoremDisagreement& d : report.disagreements) {
    out << "  #" << d.index << " oracle=" << d.verdicts.oracle
        << " char=" << d.verdicts.characterization
        << " minors=" << d.verdicts.excluded_minors << '\n'
        << format_matroid(d.matroid);
  }
  return out.str();
}

}  // namespace latmat
