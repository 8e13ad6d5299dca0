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


#include <random>

#include "copsrobbers/chain.h"
#include "copsrobbers/errors.h"
#include "doctest.h"
#include "oracles.h"

namespace cr = copsrobbers;

namespace {

void CheckClose(const std::vector<double>& a, const std::vector<double>& b,
                double tol) {
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(std::abs(a[i] - b[i]) <= tol);
}

oracle::Dense ToDense(const cr::TransitionMatrix& m) {
  oracle::Dense d(m.size(), std::vector<double>(m.size()));
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j) d[i][j] = m(i, j);
  return d;
}

}  // namespace

TEST_CASE("matrices are row stochastic and match dense builds") {
  cr::Graph g = cr::Grid(3);
  CHECK(cr::BaseTransition(g).stochasticity_error() < 1e-15);
  std::vector<cr::Vertex> cops{0, 4, 4};
  cr::TransitionMatrix m = cr::CopModifiedTransition(g, cops);
  CHECK(m.stochasticity_error() < 1e-15);
  auto dense = oracle::CopWalkMatrix(g, cops);
  for (int i = 0; i <= 9; ++i) CheckClose({m.row(i).begin(), m.row(i).end()}, dense[i], 1e-15);
  CHECK(m(9, 9) == 1.0);
  CHECK(cr::PlacementMatrix(g, cops).stochasticity_error() < 1e-15);
  CHECK_THROWS_AS(cr::BaseTransition(cr::Path(1)), std::invalid_argument);
}

TEST_CASE("worked example on P5") {
  cr::Graph g = cr::Path(5);
  std::vector<std::vector<cr::Vertex>> x{{0}, {1}, {2}, {3}, {4}};
  cr::DistVector pi = cr::Evolve(cr::UniformPlacement(5), cr::PlacementMatrix(g, x[0]));
  CheckClose(pi, {0, 0.2, 0.2, 0.2, 0.2, 0.2}, 1e-15);
  pi = cr::Evolve(pi, cr::CopModifiedTransition(g, x[1]));
  CheckClose(pi, {0, 0, 0.1, 0.3, 0.1, 0.5}, 1e-12);
  pi = cr::Evolve(pi, cr::CopModifiedTransition(g, x[2]));
  CheckClose(pi, {0, 0, 0, 0.1, 0.15, 0.75}, 1e-12);
  pi = cr::Evolve(pi, cr::CopModifiedTransition(g, x[3]));
  CheckClose(pi, {0, 0, 0, 0, 0, 1}, 1e-12);

  cr::FixedStrategy sweep = cr::PathSweep(5);
  CHECK(cr::FixedStrategyExpectedTime(g, sweep, 100) == doctest::Approx(31.0 / 20).epsilon(1e-13));
  cr::CaptureDistribution dist = cr::FixedStrategyCaptureDistribution(g, sweep, 100);
  CHECK(dist.terminated);
  // The schedule runs to round 4 even though the last cop move catches nobody.
  CHECK(dist.rounds() == 4);
  CheckClose(dist.per_round, {0.2, 0.3, 0.25, 0.25, 0.0}, 1e-12);
  CHECK(dist.cumulative.back() == doctest::Approx(1.0));
}

TEST_CASE("distribution after t rounds is pi(0) times the matrix product") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 4; ++trial) {
    cr::Graph g = oracle::RandomConnected(7, 0.3, rng);
    // Random cop walk of two cops.
    std::vector<std::vector<cr::Vertex>> rounds{{0, 6}};
    for (int t = 1; t < 6; ++t) {
      auto next = rounds.back();
      for (auto& c : next) {
        auto nb = g.closed_neighbors(c);
        c = nb[std::uniform_int_distribution<std::size_t>(0, nb.size() - 1)(rng)];
      }
      rounds.push_back(next);
    }
    cr::FixedStrategy s{rounds};
    oracle::Dense product = oracle::CopWalkMatrix(g, rounds[1]);
    for (int t = 2; t < 6; ++t) product = oracle::Multiply(product, oracle::CopWalkMatrix(g, rounds[t]));

    cr::TransitionMatrix lib = cr::CopModifiedTransition(g, rounds[1]);
    for (int t = 2; t < 6; ++t) lib = lib * cr::CopModifiedTransition(g, rounds[t]);
    auto lib_dense = ToDense(lib);
    for (int i = 0; i <= 7; ++i) CheckClose(lib_dense[i], product[i], 1e-14);

    cr::DistVector pi = cr::Evolve(cr::UniformPlacement(7), cr::PlacementMatrix(g, rounds[0]));
    cr::DistVector stepped = pi;
    for (int t = 1; t < 6; ++t) stepped = cr::StepWithCops(g, stepped, rounds[t]);
    CheckClose(stepped, oracle::RowTimes(pi, product), 1e-14);

    // Capture probability is monotone along the run.
    auto dist = cr::FixedStrategyCaptureDistribution(g, s, 5);
    for (std::size_t t = 1; t < dist.cumulative.size(); ++t) {
      CHECK(dist.cumulative[t] >= dist.cumulative[t - 1] - 1e-15);
      CHECK(dist.per_round[t] >= -1e-15);
    }
    CHECK(dist.cumulative.back() == doctest::Approx(stepped[7]).epsilon(1e-12));
  }
}

TEST_CASE("strategy validation") {
  cr::Graph g = cr::Path(5);
  CHECK_THROWS_AS(cr::ValidateStrategy(g, cr::FixedStrategy{}), std::invalid_argument);
  CHECK_THROWS_AS(cr::ValidateStrategy(g, cr::FixedStrategy{{{0}, {2}}}), std::invalid_argument);
  CHECK_THROWS_AS(cr::ValidateStrategy(g, cr::FixedStrategy{{{0}, {0, 1}}}), std::invalid_argument);
  CHECK_THROWS_AS(cr::ValidateStrategy(g, cr::FixedStrategy{{{7}}}), std::invalid_argument);
  CHECK_NOTHROW(cr::ValidateStrategy(g, cr::PathSweep(5)));
  CHECK_NOTHROW(cr::ValidateStrategy(cr::Cycle(9), cr::CycleOppositeSweep(9)));
}

TEST_CASE("nonterminating strategy is reported, not summed forever") {
  // A parked cop catches the walker with probability one, but not within
  // 20 rounds.
  cr::Graph g = cr::Cycle(6);
  cr::FixedStrategy hold{{{0}}};
  auto dist = cr::FixedStrategyCaptureDistribution(g, hold, 20);
  CHECK_FALSE(dist.terminated);
  CHECK(dist.residual > 0.0);
  CHECK_THROWS_AS(cr::FixedStrategyExpectedTime(g, hold, 20), cr::NonterminatingStrategyError);
  // With enough rounds the stationary cop does finish.
  CHECK(cr::FixedStrategyExpectedTime(g, hold, 100000) > 0.0);
}

TEST_CASE("adversarial survival of sweeps") {
  for (int n = 2; n <= 12; ++n) {
    auto t = cr::AdversarialSurvivalTime(cr::Path(n), cr::PathSweep(n));
    REQUIRE(t.has_value());
    CHECK(*t == n - 1);
  }
  for (int n = 4; n <= 12; ++n) {
    auto t = cr::AdversarialSurvivalTime(cr::Cycle(n), cr::CycleOppositeSweep(n));
    REQUIRE(t.has_value());
    CHECK(*t == (n - 1) / 2);
  }
  // A parked cop never clears a cycle.
  CHECK_FALSE(cr::AdversarialSurvivalTime(cr::Cycle(5), cr::FixedStrategy{{{0}}}).has_value());
  CHECK(cr::AdversarialSurvivalTime(cr::Path(1), cr::FixedStrategy{{{0}}}) == 0);
}

TEST_CASE("trivial strategies") {
  cr::FixedStrategy cover{{{0, 1, 2, 3, 4}}};
  CHECK(cr::FixedStrategyExpectedTime(cr::Path(5), cover, 10) == 0.0);
  CHECK(cr::AdversarialSurvivalTime(cr::Path(5), cover) == 0);
  CHECK_FALSE(cr::AdversarialSurvivalTime(cr::Cycle(4), cr::FixedStrategy{{{0}}}).has_value());
  // Two cops starting side by side on C8 and walking apart.
  cr::FixedStrategy opposite = cr::CycleOppositeSweep(8);
  CHECK(cr::Cycle(8).adjacent(opposite.rounds[0][0], opposite.rounds[0][1]));
  CHECK(cr::AdversarialSurvivalTime(cr::Cycle(8), opposite) == 3);
}
