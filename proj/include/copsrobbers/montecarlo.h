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

#ifndef COPSROBBERS_MONTECARLO_H_
#define COPSROBBERS_MONTECARLO_H_

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "copsrobbers/chain.h"
#include "copsrobbers/graph.h"
#include "copsrobbers/solver.h"

namespace copsrobbers {

// Trial i draws from mt19937_64 seeded with splitmix64(master ^ mix(i)), so a
// report depends only on (seed, inputs), never on scheduling.
inline constexpr const char* kRngName = "mt19937_64/splitmix64-per-trial";

struct SimReport {
  std::int64_t trials = 0;
  // Over completed trials (neither censored nor aborted).
  double mean = 0.0;
  double standard_error = 0.0;
  std::int64_t max = 0;
  std::int64_t censored = 0;
  std::int64_t aborted = 0;
  // histogram[t] counts completed trials with capture time t.
  std::vector<std::int64_t> histogram;
  std::uint64_t seed = 0;
  std::string rng = kRngName;
  std::string diagnostic;

  std::int64_t completed() const { return trials - censored - aborted; }
};

// Per-trial random source.
class TrialRng {
 public:
  TrialRng(std::uint64_t master_seed, std::uint64_t trial);
  std::uint64_t bits();
  // Uniform on [0, bound), bound >= 1, by rejection (no modulo bias).
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

// Drunk robber, placed uniformly, against cops that start on
// `start_config` (an index into the policy's space) and then follow the
// feedback policy. Each round: cops move, capture check, robber steps to a
// uniform open neighbour, capture check.
SimReport SimulateDrunkPursuit(const FeedbackPolicy& policy, int start_config,
                               std::int64_t trials, std::uint64_t seed,
                               std::int64_t max_rounds);

// Same game against an open-loop strategy; the last round is held.
SimReport SimulateDrunkPursuit(const Graph& g, const FixedStrategy& strategy,
                               std::int64_t trials, std::uint64_t seed,
                               std::int64_t max_rounds);

enum class Evader { kMaxDistanceGreedy, kUniformRandom };

Evader ParseEvader(const std::string& name);
std::string EvaderName(Evader evader);

// Cops take independent uniform steps in their closed neighbourhoods. The
// greedy evader starts on the vertex farthest from the nearest cop and then
// moves within N+(y) to maximise that distance; the uniform evader starts on
// a random vertex and walks like the drunk robber. Ties go to the lowest
// index. Cops start on vertices 0..k-1 (wrapping mod n) unless given.
SimReport SimulateRandomCops(const Graph& g, int k, Evader evader,
                             std::int64_t trials, std::uint64_t seed,
                             std::int64_t max_rounds,
                             std::vector<Vertex> start = {});

// 100 * D * Delta^D, capped at 10^6.
std::int64_t DefaultCensorRounds(const Graph& g);

struct WalkDeviation {
  std::int64_t trials = 0;
  std::int64_t exceeded = 0;
  double exceedance = 0.0;
  // c * sqrt(n ln n)
  double threshold = 0.0;
  // 2 n^(1 - c^2 / 4)
  double bound = 0.0;
};

// Fraction of n-step simple +-1 walks from 0 with some |X_t| > threshold.
WalkDeviation WalkDeviationCheck(int n, double c, std::int64_t trials,
                                 std::uint64_t seed);

}  // namespace copsrobbers

#endif  // COPSROBBERS_MONTECARLO_H_
