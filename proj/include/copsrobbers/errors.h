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

#ifndef COPSROBBERS_ERRORS_H_
#define COPSROBBERS_ERRORS_H_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace copsrobbers {

// The requested (graph, k) state space exceeds the configured budget.
class InfeasibleSizeError : public std::runtime_error {
 public:
  InfeasibleSizeError(std::int64_t states, std::int64_t cap)
      : std::runtime_error("state space of " + std::to_string(states) +
                           " states exceeds cap " + std::to_string(cap)),
        states_(states),
        cap_(cap) {}
  std::int64_t states() const { return states_; }
  std::int64_t cap() const { return cap_; }

 private:
  std::int64_t states_;
  std::int64_t cap_;
};

// Value iteration ran out of sweeps before reaching its tolerance.
class NonConvergenceError : public std::runtime_error {
 public:
  NonConvergenceError(std::int64_t sweeps, double residual)
      : std::runtime_error("no convergence after " + std::to_string(sweeps) +
                           " sweeps, last residual " +
                           std::to_string(residual)),
        sweeps_(sweeps),
        residual_(residual) {}
  std::int64_t sweeps() const { return sweeps_; }
  double residual() const { return residual_; }

 private:
  std::int64_t sweeps_;
  double residual_;
};

// A fixed strategy left uncaptured mass after the round budget.
class NonterminatingStrategyError : public std::runtime_error {
 public:
  NonterminatingStrategyError(double partial_sum, double residual,
                              std::int64_t rounds)
      : std::runtime_error("nonterminating strategy: residual " +
                           std::to_string(residual) + " after " +
                           std::to_string(rounds) + " rounds"),
        partial_sum_(partial_sum),
        residual_(residual),
        rounds_(rounds) {}
  double partial_sum() const { return partial_sum_; }
  double residual() const { return residual_; }
  std::int64_t rounds() const { return rounds_; }

 private:
  double partial_sum_;
  double residual_;
  std::int64_t rounds_;
};

}  // namespace copsrobbers

#endif  // COPSROBBERS_ERRORS_H_
