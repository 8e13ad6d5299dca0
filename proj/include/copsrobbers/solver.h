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

#ifndef COPSROBBERS_SOLVER_H_
#define COPSROBBERS_SOLVER_H_

#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "copsrobbers/config_space.h"
#include "copsrobbers/graph.h"

namespace copsrobbers {

// Robber-win marker in adversarial tables. IEEE infinity saturates under
// addition and compares above every finite value.
inline constexpr double kInfinite = std::numeric_limits<double>::infinity();

enum class Opponent { kAdversarial, kDrunk };

// Values per game state (cop configuration, robber vertex), cops to move.
// States where a cop already sits on the robber hold 0.
class ValueTable {
 public:
  ValueTable(std::shared_ptr<const ConfigSpace> space, Opponent opponent,
             std::vector<double> values);

  const ConfigSpace& space() const { return *space_; }
  std::shared_ptr<const ConfigSpace> shared_space() const { return space_; }
  Opponent opponent() const { return opponent_; }

  double at(int config_index, Vertex robber) const {
    return values_[space_->state(config_index, robber)];
  }
  double at(std::span<const Vertex> cops, Vertex robber) const {
    return at(space_->index_of(cops), robber);
  }
  std::span<const double> values() const { return values_; }

 private:
  std::shared_ptr<const ConfigSpace> space_;
  Opponent opponent_;
  std::vector<double> values_;
};

// Cop move per state, as a successor configuration index; kUndefinedMove
// where no move leads to a finite value.
class FeedbackPolicy {
 public:
  static constexpr std::int32_t kUndefinedMove = -1;

  FeedbackPolicy(std::shared_ptr<const ConfigSpace> space,
                 std::vector<std::int32_t> moves);

  const ConfigSpace& space() const { return *space_; }
  std::shared_ptr<const ConfigSpace> shared_space() const { return space_; }
  std::int32_t next(int config_index, Vertex robber) const {
    return moves_[space_->state(config_index, robber)];
  }
  CopConfig next(std::span<const Vertex> cops, Vertex robber) const;
  bool defined(int config_index, Vertex robber) const {
    return next(config_index, robber) != kUndefinedMove;
  }
  std::int64_t undefined_states() const;
  std::span<const std::int32_t> moves() const { return moves_; }

 private:
  std::shared_ptr<const ConfigSpace> space_;
  std::vector<std::int32_t> moves_;
};

// Adversarial robber reply per state (robber to move): a vertex of N+(y),
// or -1 where the robber is already caught.
struct RobberPolicy {
  std::shared_ptr<const ConfigSpace> space;
  std::vector<Vertex> moves;
  Vertex next(int config_index, Vertex robber) const {
    return moves[space->state(config_index, robber)];
  }
};

enum class Scheme { kJacobi, kGaussSeidel };

struct SolveOptions {
  Scheme scheme = Scheme::kGaussSeidel;
  double tolerance = 1e-10;
  std::int64_t max_sweeps = 1'000'000;
  std::int64_t state_cap = kDefaultStateCap;
  // Called with the table after every sweep (including sweep 0, the initial
  // all-zero table).
  std::function<void(std::int64_t sweep, std::span<const double> table)>
      on_sweep;
};

struct CaarResult {
  ValueTable cop_to_move;     // C
  ValueTable robber_to_move;  // R
  FeedbackPolicy cop_policy;  // U
  RobberPolicy robber_policy; // W
  std::int64_t iterations = 0;
};

struct CadrResult {
  ValueTable values;
  FeedbackPolicy policy;
  std::int64_t sweeps = 0;
  double residual = 0.0;
};

struct GameValue {
  double value = 0.0;
  // Every configuration that attains `value`, ascending.
  std::vector<CopConfig> optimal_starts;
};

// Adversarial fixpoint: R(x,y) = max over y' in N+(y) of C(x,y') and
// C(x,y) = 1 + min over successors x' of R(x',y), iterated (Jacobi) from
// C = inf off the capture states until nothing changes. Entries left at
// kInfinite are robber wins. Ties go to the lexicographically smallest move.
CaarResult CaarSolve(const Graph& g, int k,
                     std::int64_t state_cap = kDefaultStateCap);

// min over x of max over y of C(x,y); kInfinite iff k is below the cop number.
GameValue CaptureTime(const CaarResult& result);
GameValue CaptureTime(const Graph& g, int k,
                      std::int64_t state_cap = kDefaultStateCap);

// Value iteration for the expected capture time of a drunk robber, starting
// from C = 0. Throws NonConvergenceError when max_sweeps runs out.
CadrResult CadrSolve(const Graph& g, int k, const SolveOptions& opts = {});

// Optimal starts are the configurations within 1e-9 of the minimum average.
GameValue DrunkCaptureTime(const CadrResult& result);
GameValue DrunkCaptureTime(const Graph& g, int k,
                           const SolveOptions& opts = {});

// Greedy cop policy for a solved table: the drunk argmin of the expected
// continuation, or the adversarial argmin of the robber's best reply.
// Capture states hold their configuration. States with no finite-valued
// successor are left undefined.
FeedbackPolicy ExtractPolicy(const ValueTable& table);

// Expected capture time of the drunk robber under a fixed feedback policy,
// by iterating the policy's absorbing chain from 0. States where the policy
// is undefined evaluate to kInfinite.
ValueTable EvaluatePolicy(const FeedbackPolicy& policy, double tolerance,
                          std::int64_t max_sweeps);

struct CostOptions {
  SolveOptions solve;
  int max_cops = 3;
};

struct CostOfDrunkenness {
  int cop_number = 0;
  GameValue capture_time;
  GameValue drunk_capture_time;
  double ratio = 1.0;
  std::int64_t caar_iterations = 0;
  std::int64_t cadr_sweeps = 0;
};

// Smallest k <= max_cops with a finite capture time, then ct/dct at that k.
// Throws InfeasibleSizeError before allocating an over-budget state space,
// and CopNumberNotFound when no k up to max_cops wins.
CostOfDrunkenness ComputeCostOfDrunkenness(const Graph& g,
                                           const CostOptions& opts = {});

class CopNumberNotFound : public std::runtime_error {
 public:
  explicit CopNumberNotFound(int max_cops)
      : std::runtime_error("no k <= " + std::to_string(max_cops) +
                           " cops capture the robber"),
        max_cops_(max_cops) {}
  int max_cops() const { return max_cops_; }

 private:
  int max_cops_;
};

}  // namespace copsrobbers

#endif  // COPSROBBERS_SOLVER_H_
