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

#include "copsrobbers/chain.h"

#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

#include "copsrobbers/errors.h"

namespace copsrobbers {
namespace {

std::vector<std::uint8_t> Occupancy(int n, std::span<const Vertex> cops) {
  std::vector<std::uint8_t> occupied(n, 0);
  for (Vertex c : cops) {
    if (c < 0 || c >= n) {
      throw std::invalid_argument("cop vertex " + std::to_string(c) +
                                  " out of range");
    }
    occupied[c] = 1;
  }
  return occupied;
}

void RequireMobileRobber(const Graph& g) {
  if (g.num_vertices() < 2) {
    throw std::invalid_argument(
        "random walk undefined on a single vertex: the robber cannot move");
  }
}

}  // namespace

double TransitionMatrix::stochasticity_error() const {
  double worst = 0.0;
  for (int r = 0; r < size_; ++r) {
    double sum = 0.0;
    for (double p : row(r)) sum += p;
    worst = std::max(worst, std::abs(sum - 1.0));
  }
  return worst;
}

TransitionMatrix operator*(const TransitionMatrix& a,
                           const TransitionMatrix& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("matrix size mismatch");
  }
  const int n = a.size();
  TransitionMatrix out(n);
  for (int i = 0; i < n; ++i) {
    for (int l = 0; l < n; ++l) {
      double ail = a(i, l);
      if (ail == 0.0) continue;
      for (int j = 0; j < n; ++j) out(i, j) += ail * b(l, j);
    }
  }
  return out;
}

TransitionMatrix BaseTransition(const Graph& g) {
  RequireMobileRobber(g);
  const int n = g.num_vertices();
  TransitionMatrix m(n + 1);
  for (Vertex i = 0; i < n; ++i) {
    const double p = 1.0 / g.degree(i);
    for (Vertex j : g.neighbors(i)) m(i, j) = p;
  }
  m(n, n) = 1.0;
  return m;
}

TransitionMatrix CopModifiedTransition(const Graph& g,
                                       std::span<const Vertex> cops) {
  TransitionMatrix m = BaseTransition(g);
  const int n = g.num_vertices();
  std::vector<std::uint8_t> occupied = Occupancy(n, cops);
  for (Vertex y = 0; y < n; ++y) {
    if (occupied[y]) {
      // The cop walks onto the robber before the robber moves.
      for (int j = 0; j < n; ++j) m(y, j) = 0.0;
      m(y, n) = 1.0;
      continue;
    }
    for (Vertex j : g.neighbors(y)) {
      if (occupied[j]) {
        m(y, n) += m(y, j);
        m(y, j) = 0.0;
      }
    }
  }
  return m;
}

TransitionMatrix PlacementMatrix(const Graph& g, std::span<const Vertex> cops) {
  const int n = g.num_vertices();
  std::vector<std::uint8_t> occupied = Occupancy(n, cops);
  TransitionMatrix m(n + 1);
  for (Vertex y = 0; y < n; ++y) m(y, occupied[y] ? n : y) = 1.0;
  m(n, n) = 1.0;
  return m;
}

DistVector UniformPlacement(int n) {
  DistVector pi(n + 1, 1.0 / n);
  pi[n] = 0.0;
  return pi;
}

DistVector Evolve(const DistVector& pi, const TransitionMatrix& m) {
  if (static_cast<int>(pi.size()) != m.size()) {
    throw std::invalid_argument(
        "distribution has " + std::to_string(pi.size()) +
        " entries, matrix has " + std::to_string(m.size()) + " rows");
  }
  DistVector out(pi.size(), 0.0);
  for (int i = 0; i < m.size(); ++i) {
    if (pi[i] == 0.0) continue;
    auto row = m.row(i);
    for (int j = 0; j < m.size(); ++j) out[j] += pi[i] * row[j];
  }
  return out;
}

DistVector StepWithCops(const Graph& g, const DistVector& pi,
                        std::span<const Vertex> cops) {
  const int n = g.num_vertices();
  if (static_cast<int>(pi.size()) != n + 1) {
    throw std::invalid_argument("distribution size mismatch");
  }
  RequireMobileRobber(g);
  std::vector<std::uint8_t> occupied = Occupancy(n, cops);
  DistVector out(n + 1, 0.0);
  out[n] = pi[n];
  for (Vertex y = 0; y < n; ++y) {
    if (pi[y] == 0.0) continue;
    if (occupied[y]) {
      out[n] += pi[y];
      continue;
    }
    const double share = pi[y] / g.degree(y);
    for (Vertex j : g.neighbors(y)) {
      (occupied[j] ? out[n] : out[j]) += share;
    }
  }
  return out;
}

void ValidateStrategy(const Graph& g, const FixedStrategy& s) {
  if (s.rounds.empty()) {
    throw std::invalid_argument("strategy has no rounds");
  }
  const std::size_t k = s.rounds.front().size();
  if (k == 0) throw std::invalid_argument("strategy has no cops");
  for (std::size_t t = 0; t < s.rounds.size(); ++t) {
    const auto& round = s.rounds[t];
    if (round.size() != k) {
      throw std::invalid_argument("round " + std::to_string(t) + " has " +
                                  std::to_string(round.size()) +
                                  " cops, expected " + std::to_string(k));
    }
    for (std::size_t i = 0; i < k; ++i) {
      Vertex v = round[i];
      if (v < 0 || v >= g.num_vertices()) {
        throw std::invalid_argument("round " + std::to_string(t) +
                                    ": vertex " + std::to_string(v) +
                                    " out of range");
      }
      if (t > 0) {
        Vertex from = s.rounds[t - 1][i];
        if (from != v && !g.adjacent(from, v)) {
          throw std::invalid_argument(
              "round " + std::to_string(t) + ": cop " + std::to_string(i) +
              " jumps from " + std::to_string(from) + " to " +
              std::to_string(v));
        }
      }
    }
  }
}

FixedStrategy PathSweep(int n) {
  if (n < 1) throw std::invalid_argument("path sweep needs n >= 1");
  FixedStrategy s;
  for (Vertex v = 0; v < n; ++v) s.rounds.push_back({v});
  return s;
}

FixedStrategy CycleOppositeSweep(int n) {
  if (n < 3) throw std::invalid_argument("cycle sweep needs n >= 3");
  FixedStrategy s;
  for (Vertex t = 0; t <= (n - 1) / 2; ++t) {
    s.rounds.push_back({t, std::max<Vertex>(n - 1 - t, t)});
  }
  return s;
}

std::int64_t DefaultMaxRounds(const Graph& g) {
  constexpr double kCap = 1e6;
  double rounds = 10.0 * StationaryCopBound(g);
  return static_cast<std::int64_t>(std::min(rounds, kCap));
}

CaptureDistribution FixedStrategyCaptureDistribution(const Graph& g,
                                                     const FixedStrategy& s,
                                                     std::int64_t max_rounds) {
  ValidateStrategy(g, s);
  const int n = g.num_vertices();
  CaptureDistribution out;
  if (n == 1) {
    out.per_round = {1.0};
    out.cumulative = {1.0};
    out.terminated = true;
    return out;
  }
  const std::int64_t schedule_end =
      static_cast<std::int64_t>(s.rounds.size()) - 1;

  // Placement round, equivalent to UniformPlacement * PlacementMatrix(x_0).
  std::vector<std::uint8_t> occupied = Occupancy(n, s.at(0));
  DistVector pi(n + 1, 0.0);
  for (Vertex y = 0; y < n; ++y) (occupied[y] ? pi[n] : pi[y]) += 1.0 / n;

  auto uncaptured = [n](const DistVector& d) {
    double mass = 0.0;
    for (int y = 0; y < n; ++y) mass += d[y];
    return mass;
  };

  out.per_round.push_back(pi[n]);
  out.cumulative.push_back(pi[n]);
  double residual = uncaptured(pi);
  for (std::int64_t t = 1; t <= max_rounds; ++t) {
    if (t > schedule_end && residual <= kResidualTolerance) break;
    DistVector next = StepWithCops(g, pi, s.at(t));
    out.per_round.push_back(next[n] - pi[n]);
    out.cumulative.push_back(next[n]);
    pi = std::move(next);
    residual = uncaptured(pi);
  }
  out.residual = residual;
  out.terminated = out.rounds() >= schedule_end &&
                   residual <= kResidualTolerance;
  return out;
}

double FixedStrategyExpectedTime(const Graph& g, const FixedStrategy& s,
                                 std::int64_t max_rounds) {
  CaptureDistribution dist = FixedStrategyCaptureDistribution(g, s, max_rounds);
  double expected = 0.0;
  for (std::size_t t = 1; t < dist.per_round.size(); ++t) {
    expected += static_cast<double>(t) * dist.per_round[t];
  }
  if (!dist.terminated) {
    throw NonterminatingStrategyError(expected, dist.residual, dist.rounds());
  }
  return expected;
}

std::optional<std::int64_t> AdversarialSurvivalTime(const Graph& g,
                                                    const FixedStrategy& s) {
  ValidateStrategy(g, s);
  const int n = g.num_vertices();
  const std::int64_t schedule_end =
      static_cast<std::int64_t>(s.rounds.size()) - 1;

  // Positions the robber can hold, uncaught, at the end of each round.
  std::vector<std::uint8_t> alive(n, 0);
  {
    std::vector<std::uint8_t> occupied = Occupancy(n, s.at(0));
    for (Vertex y = 0; y < n; ++y) alive[y] = !occupied[y];
  }
  auto empty = [](const std::vector<std::uint8_t>& set) {
    return std::find(set.begin(), set.end(), 1) == set.end();
  };
  if (empty(alive)) return 0;

  std::set<std::vector<std::uint8_t>> seen_while_holding;
  for (std::int64_t t = 1;; ++t) {
    std::vector<std::uint8_t> occupied = Occupancy(n, s.at(t));
    // Cop phase.
    for (Vertex y = 0; y < n; ++y) alive[y] = alive[y] && !occupied[y];
    if (empty(alive)) return t;
    // Robber phase.
    std::vector<std::uint8_t> next(n, 0);
    for (Vertex y = 0; y < n; ++y) {
      if (!alive[y]) continue;
      next[y] = 1;
      for (Vertex w : g.neighbors(y)) {
        if (!occupied[w]) next[w] = 1;
      }
    }
    alive = std::move(next);
    if (t >= schedule_end && !seen_while_holding.insert(alive).second) {
      return std::nullopt;
    }
  }
}

}  // namespace copsrobbers
