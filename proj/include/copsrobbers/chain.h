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

#ifndef COPSROBBERS_CHAIN_H_
#define COPSROBBERS_CHAIN_H_

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "copsrobbers/graph.h"

namespace copsrobbers {

// Probability row over V plus the capture state, which sits at index n.
using DistVector = std::vector<double>;

// Uncaptured mass below this counts as zero when deciding that a fixed
// strategy has terminated.
constexpr double kResidualTolerance = 1e-12;

// Dense (n+1) x (n+1) row-stochastic matrix; row i holds the outgoing
// probabilities of state i.
class TransitionMatrix {
 public:
  explicit TransitionMatrix(int size)
      : size_(size), data_(static_cast<std::size_t>(size) * size, 0.0) {}

  int size() const { return size_; }
  double operator()(int row, int col) const {
    return data_[static_cast<std::size_t>(row) * size_ + col];
  }
  double& operator()(int row, int col) {
    return data_[static_cast<std::size_t>(row) * size_ + col];
  }
  std::span<const double> row(int r) const {
    return {data_.data() + static_cast<std::size_t>(r) * size_,
            static_cast<std::size_t>(size_)};
  }

  // Largest |row sum - 1| over all rows.
  double stochasticity_error() const;

  friend TransitionMatrix operator*(const TransitionMatrix& a,
                                    const TransitionMatrix& b);

 private:
  int size_;
  std::vector<double> data_;
};

// The robber's random walk with no cops present, plus an absorbing capture
// state. Rejects the one-vertex graph, where the walk cannot move.
TransitionMatrix BaseTransition(const Graph& g);

// Walk with cops standing on `cops`: a robber already on a cop vertex is
// captured outright, and mass stepping onto a cop vertex is redirected to the
// capture state. Duplicate cop vertices are allowed.
TransitionMatrix CopModifiedTransition(const Graph& g,
                                       std::span<const Vertex> cops);

// Placement round: identity, except rows at cop vertices go to capture.
TransitionMatrix PlacementMatrix(const Graph& g, std::span<const Vertex> cops);

// (1/n, ..., 1/n, 0).
DistVector UniformPlacement(int n);

// Row vector times matrix. Throws std::invalid_argument on a size mismatch.
DistVector Evolve(const DistVector& pi, const TransitionMatrix& m);

// Same product as Evolve(pi, CopModifiedTransition(g, cops)) evaluated from
// the adjacency lists in O(|E|).
DistVector StepWithCops(const Graph& g, const DistVector& pi,
                        std::span<const Vertex> cops);

// An open-loop cop schedule x_0, x_1, ..., x_s. Entry i of every round is the
// position of cop i, so rounds are not canonicalised.
struct FixedStrategy {
  std::vector<std::vector<Vertex>> rounds;

  int num_cops() const {
    return rounds.empty() ? 0 : static_cast<int>(rounds.front().size());
  }
  // Configuration in force at round t; the last one is held forever.
  std::span<const Vertex> at(std::int64_t t) const {
    return rounds[static_cast<std::size_t>(
        std::min<std::int64_t>(t, static_cast<std::int64_t>(rounds.size()) - 1))];
  }
};

// Throws std::invalid_argument unless the strategy is nonempty, every round
// has the same cop count, all vertices are in range and each cop moves inside
// its closed neighbourhood between rounds.
void ValidateStrategy(const Graph& g, const FixedStrategy& s);

// Start on vertex 0 and walk to n-1.
FixedStrategy PathSweep(int n);
// Two cops start on the adjacent vertices 0 and n-1 and walk in opposite
// directions until they meet.
FixedStrategy CycleOppositeSweep(int n);

// 10 * D * Delta^D, capped at 10^6.
std::int64_t DefaultMaxRounds(const Graph& g);

struct CaptureDistribution {
  // per_round[t] is the probability of capture exactly at round t.
  std::vector<double> per_round;
  std::vector<double> cumulative;
  double residual = 0.0;
  bool terminated = false;
  std::int64_t rounds() const {
    return static_cast<std::int64_t>(per_round.size()) - 1;
  }
};

// Capture-time distribution of a drunk robber placed uniformly at random
// against a fixed strategy. After the schedule ends the last configuration
// is held until the uncaptured mass drops to kResidualTolerance or
// `max_rounds` rounds have been played; `terminated` tells which.
CaptureDistribution FixedStrategyCaptureDistribution(const Graph& g,
                                                     const FixedStrategy& s,
                                                     std::int64_t max_rounds);

// Sum of t * q_t. Throws NonterminatingStrategyError (carrying the partial
// sum and residual) when the distribution did not terminate.
double FixedStrategyExpectedTime(const Graph& g, const FixedStrategy& s,
                                 std::int64_t max_rounds);

// Longest game an invisible but omniscient robber can force against a fixed
// deterministic strategy; the robber may stay or step along an edge.
// std::nullopt means the robber survives forever.
std::optional<std::int64_t> AdversarialSurvivalTime(const Graph& g,
                                                    const FixedStrategy& s);

}  // namespace copsrobbers

#endif  // COPSROBBERS_CHAIN_H_
