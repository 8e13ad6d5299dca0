// Copyright 2026 The copsrobbers Authors.
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

#include "copsrobbers/io.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace copsrobbers {
namespace {

[[noreturn]] void ParseError(int line, const std::string& what) {
  throw std::invalid_argument("line " + std::to_string(line) + ": " + what);
}

bool IsBlank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

// Reads every integer on the line; rejects any other token.
std::vector<long long> Integers(const std::string& line, int line_no) {
  std::istringstream tokens(line);
  std::vector<long long> out;
  std::string token;
  while (tokens >> token) {
    std::size_t used = 0;
    long long value = 0;
    try {
      value = std::stoll(token, &used);
    } catch (const std::exception&) {
      ParseError(line_no, "expected an integer, got '" + token + "'");
    }
    if (used != token.size()) {
      ParseError(line_no, "expected an integer, got '" + token + "'");
    }
    out.push_back(value);
  }
  return out;
}

std::ifstream OpenOrThrow(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  return in;
}

void WriteConfigColumns(std::ostream& out, const char* prefix, int k) {
  for (int i = 0; i < k; ++i) out << prefix << i << ',';
}

}  // namespace

std::string FormatNumber(double value, int digits) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (std::isnan(value)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, value);
  return buf;
}

Graph ReadEdgeList(std::istream& in) {
  std::string line;
  int line_no = 0;
  std::vector<long long> header;
  while (header.empty() && std::getline(in, line)) {
    ++line_no;
    header = Integers(line, line_no);
  }
  if (header.size() != 2) ParseError(line_no, "header must be 'n m'");
  const long long n = header[0];
  const long long m = header[1];
  if (n < 1 || n > std::numeric_limits<Vertex>::max() / 2) {
    ParseError(line_no, "vertex count out of range");
  }
  if (m < 0) ParseError(line_no, "negative edge count");
  std::vector<Edge> edges;
  while (static_cast<long long>(edges.size()) < m && std::getline(in, line)) {
    ++line_no;
    if (IsBlank(line)) continue;
    auto values = Integers(line, line_no);
    if (values.size() != 2) ParseError(line_no, "edge must be 'u v'");
    for (long long v : values) {
      if (v < 0 || v >= n) ParseError(line_no, "vertex out of range");
    }
    if (values[0] == values[1]) ParseError(line_no, "self-loop");
    edges.emplace_back(static_cast<Vertex>(values[0]),
                       static_cast<Vertex>(values[1]));
  }
  if (static_cast<long long>(edges.size()) != m) {
    ParseError(line_no, "expected " + std::to_string(m) + " edges, found " +
                            std::to_string(edges.size()));
  }
  while (std::getline(in, line)) {
    ++line_no;
    if (!IsBlank(line)) ParseError(line_no, "unexpected content after edges");
  }
  return Graph(static_cast<int>(n), edges);
}

Graph ReadEdgeListFile(const std::string& path) {
  std::ifstream in = OpenOrThrow(path);
  return ReadEdgeList(in);
}

void WriteEdgeList(std::ostream& out, const Graph& g) {
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

FixedStrategy ReadStrategy(std::istream& in) {
  FixedStrategy s;
  std::string line;
  int line_no = 0;
  int blank_run = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (IsBlank(line)) {
      ++blank_run;
      continue;
    }
    if (blank_run > 0 && !s.rounds.empty()) {
      ParseError(line_no - 1, "blank line inside strategy");
    }
    blank_run = 0;
    auto values = Integers(line, line_no);
    std::vector<Vertex> round;
    for (long long v : values) {
      if (v < 0 || v > std::numeric_limits<Vertex>::max()) {
        ParseError(line_no, "vertex out of range");
      }
      round.push_back(static_cast<Vertex>(v));
    }
    s.rounds.push_back(std::move(round));
  }
  if (s.rounds.empty()) throw std::invalid_argument("strategy is empty");
  return s;
}

FixedStrategy ReadStrategyFile(const std::string& path) {
  std::ifstream in = OpenOrThrow(path);
  return ReadStrategy(in);
}

void WriteStrategy(std::ostream& out, const FixedStrategy& s) {
  for (const auto& round : s.rounds) {
    for (std::size_t i = 0; i < round.size(); ++i) {
      out << (i ? " " : "") << round[i];
    }
    out << '\n';
  }
}

void WriteCaptureDistributionCsv(std::ostream& out,
                                 const CaptureDistribution& dist,
                                 int digits) {
  out << "t,q_t,cumulative\n";
  for (std::size_t t = 0; t < dist.per_round.size(); ++t) {
    out << t << ',' << FormatNumber(dist.per_round[t], digits) << ','
        << FormatNumber(dist.cumulative[t], digits) << '\n';
  }
}

void WriteValueTableCsv(std::ostream& out, const ValueTable& table,
                        int digits) {
  const ConfigSpace& space = table.space();
  WriteConfigColumns(out, "cop", space.k());
  out << "y,value\n";
  for (int x = 0; x < space.num_configs(); ++x) {
    for (Vertex y = 0; y < space.n(); ++y) {
      for (Vertex c : space.config(x)) out << c << ',';
      out << y << ',' << FormatNumber(table.at(x, y), digits) << '\n';
    }
  }
}

void WritePolicyCsv(std::ostream& out, const FeedbackPolicy& policy) {
  const ConfigSpace& space = policy.space();
  WriteConfigColumns(out, "cop", space.k());
  out << "y";
  for (int i = 0; i < space.k(); ++i) out << ",next" << i;
  out << '\n';
  for (int x = 0; x < space.num_configs(); ++x) {
    for (Vertex y = 0; y < space.n(); ++y) {
      for (Vertex c : space.config(x)) out << c << ',';
      out << y;
      std::int32_t move = policy.next(x, y);
      for (int i = 0; i < space.k(); ++i) {
        out << ',' << (move == FeedbackPolicy::kUndefinedMove
                           ? -1
                           : space.config(move)[i]);
      }
      out << '\n';
    }
  }
}

std::string SimReportJson(const SimReport& report, int indent) {
  nlohmann::json j = {
      {"trials", report.trials},       {"mean", report.mean},
      {"stderr", report.standard_error}, {"max", report.max},
      {"censored", report.censored},   {"aborted", report.aborted},
      {"histogram", report.histogram}, {"seed", report.seed},
      {"rng", report.rng},
  };
  if (!report.diagnostic.empty()) j["diagnostic"] = report.diagnostic;
  return j.dump(indent);
}

std::string WalkDeviationJson(const WalkDeviation& result, std::uint64_t seed,
                              int indent) {
  nlohmann::json j = {
      {"trials", result.trials},       {"exceeded", result.exceeded},
      {"exceedance", result.exceedance}, {"threshold", result.threshold},
      {"bound", result.bound},         {"seed", seed},
      {"rng", kRngName},
  };
  return j.dump(indent);
}

}  // namespace copsrobbers
