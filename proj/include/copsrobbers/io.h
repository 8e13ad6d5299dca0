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

#ifndef COPSROBBERS_IO_H_
#define COPSROBBERS_IO_H_

#include <iosfwd>
#include <string>

#include "copsrobbers/chain.h"
#include "copsrobbers/graph.h"
#include "copsrobbers/montecarlo.h"
#include "copsrobbers/solver.h"

namespace copsrobbers {

inline constexpr int kDefaultDigits = 6;

// `digits` significant digits; infinity prints as "inf".
std::string FormatNumber(double value, int digits = kDefaultDigits);

// Edge-list text: a header line "n m" followed by m lines "u v". Throws
// std::invalid_argument with the offending line number on malformed input;
// self-loops, duplicate edges and disconnected graphs are rejected.
Graph ReadEdgeList(std::istream& in);
Graph ReadEdgeListFile(const std::string& path);
// Writes edges sorted, each as "u v" with u < v.
void WriteEdgeList(std::ostream& out, const Graph& g);

// One configuration per line, k whitespace-separated vertices; line t+1 is
// round t. Trailing blank lines are ignored; interior ones are an error.
FixedStrategy ReadStrategy(std::istream& in);
FixedStrategy ReadStrategyFile(const std::string& path);
void WriteStrategy(std::ostream& out, const FixedStrategy& s);

// "t,q_t,cumulative"
void WriteCaptureDistributionCsv(std::ostream& out,
                                 const CaptureDistribution& dist,
                                 int digits = kDefaultDigits);

// "cop0,...,cop{k-1},y,value"
void WriteValueTableCsv(std::ostream& out, const ValueTable& table,
                        int digits = kDefaultDigits);

// "cop0,...,cop{k-1},y,next0,...,next{k-1}"; undefined moves print -1.
void WritePolicyCsv(std::ostream& out, const FeedbackPolicy& policy);

// {trials, mean, stderr, max, censored, aborted, histogram, seed, rng}
std::string SimReportJson(const SimReport& report, int indent = -1);
std::string WalkDeviationJson(const WalkDeviation& result, std::uint64_t seed,
                              int indent = -1);

}  // namespace copsrobbers

#endif  // COPSROBBERS_IO_H_
