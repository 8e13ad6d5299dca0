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

#include "copsrobbers/solver.h"

#include <algorithm>
#include <cmath>
#include <utility>

#include "copsrobbers/errors.h"

namespace copsrobbers {
namespace {

std::vector<double> InverseDegrees(const Graph& g) {
  std::vector<double> inv(g.num_vertices(), 0.0);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) > 0) inv[v] = 1.0 / g.degree(v);
  }
  return inv;
}

// Expected continuation after the cops move to `next_config` with the robber
// on y: 0 if a cop landed on y, otherwise the walk average of the table.
inline double DrunkContinuation(const ConfigSpace& space, const double* table,
                                const std::vector<double>& inv_degree,
                                int next_config, Vertex y) {
  if (space.occupied(next_config, y)) return 0.0;
  const double* row = table + space.state(next_config, 0);
  double sum = 0.0;
  for (Vertex w : space.graph().neighbors(y)) sum += row[w];
  return sum * inv_degree[y];
}

// Robber's best reply value: max over N+(y) of C(x, y').
inline double AdversarialReply(const ConfigSpace& space, const double* table,
                               int config, Vertex y, Vertex* argmax) {
  if (space.occupied(config, y)) {
    if (argmax) *argmax = -1;
    return 0.0;
  }
  const double* row = table + space.state(config, 0);
  double best = row[y];
  Vertex choice = y;
  for (Vertex w : space.graph().neighbors(y)) {
    // Closed neighbourhood scanned in ascending order; y slots in by value.
    if (row[w] > best || (row[w] == best && w < choice)) {
      best = row[w];
      choice = w;
    }
  }
  if (argmax) *argmax = choice;
  return best;
}

std::vector<double> RobberTable(const ConfigSpace& space,
                                const std::vector<double>& cop_table) {
  std::vector<double> reply(cop_table.size(), 0.0);
  for (int x = 0; x < space.num_configs(); ++x) {
    for (Vertex y = 0; y < space.n(); ++y) {
      reply[space.state(x, y)] =
          AdversarialReply(space, cop_table.data(), x, y, nullptr);
    }
  }
  return reply;
}

GameValue BestStart(const ValueTable& table, bool average) {
  const ConfigSpace& space = table.space();
  const int n = space.n();
  std::vector<double> score(space.num_configs());
  for (int x = 0; x < space.num_configs(); ++x) {
    double acc = 0.0;
    for (Vertex y = 0; y < n; ++y) {
      double v = table.at(x, y);
      acc = average ? acc + v : std::max(acc, v);
    }
    score[x] = average ? acc / n : acc;
  }
  GameValue out;
  out.value = *std::min_element(score.begin(), score.end());
  const double slack =
      average ? 1e-9 * std::max(1.0, std::abs(out.value)) : 0.0;
  for (int x = 0; x < space.num_configs(); ++x) {
    if (score[x] <= out.value + slack) {
      out.optimal_starts.push_back(space.config_vector(x));
    }
  }
  return out;
}

}  // namespace

ValueTable::ValueTable(std::shared_ptr<const ConfigSpace> space,
                       Opponent opponent, std::vector<double> values)
    : space_(std::move(space)), opponent_(opponent), values_(std::move(values)) {
  if (static_cast<std::int64_t>(values_.size()) != space_->num_states()) {
    throw std::invalid_argument("value table size mismatch");
  }
}

FeedbackPolicy::FeedbackPolicy(std::shared_ptr<const ConfigSpace> space,
                               std::vector<std::int32_t> moves)
    : space_(std::move(space)), moves_(std::move(moves)) {
  if (static_cast<std::int64_t>(moves_.size()) != space_->num_states()) {
    throw std::invalid_argument("policy size mismatch");
  }
}

CopConfig FeedbackPolicy::next(std::span<const Vertex> cops,
                               Vertex robber) const {
  std::int32_t move = next(space_->index_of(cops), robber);
  if (move == kUndefinedMove) return {};
  return space_->config_vector(move);
}

std::int64_t FeedbackPolicy::undefined_states() const {
  return std::count(moves_.begin(), moves_.end(), kUndefinedMove);
}

CaarResult CaarSolve(const Graph& g, int k, std::int64_t state_cap) {
  auto space = std::make_shared<const ConfigSpace>(g, k, state_cap);
  const int n = space->n();
  const auto states = static_cast<std::size_t>(space->num_states());

  std::vector<double> cop(states, kInfinite);
  for (int x = 0; x < space->num_configs(); ++x) {
    for (Vertex c : space->config(x)) cop[space->state(x, c)] = 0.0;
  }
  std::vector<double> robber(states);
  std::vector<double> next(states);

  std::int64_t iterations = 0;
  bool changed = true;
  while (changed) {
    ++iterations;
    robber = RobberTable(*space, cop);
    changed = false;
    for (int x = 0; x < space->num_configs(); ++x) {
      auto successors = space->successors(x);
      for (Vertex y = 0; y < n; ++y) {
        const auto s = space->state(x, y);
        if (space->occupied(x, y)) {
          next[s] = 0.0;
          continue;
        }
        double best = kInfinite;
        for (std::int32_t x2 : successors) {
          best = std::min(best, robber[space->state(x2, y)]);
        }
        next[s] = 1.0 + best;
        changed = changed || next[s] != cop[s];
      }
    }
    std::swap(cop, next);
  }

  ValueTable cop_table(space, Opponent::kAdversarial, cop);
  FeedbackPolicy cop_policy = ExtractPolicy(cop_table);

  RobberPolicy robber_policy{space, std::vector<Vertex>(states, -1)};
  for (int x = 0; x < space->num_configs(); ++x) {
    for (Vertex y = 0; y < n; ++y) {
      AdversarialReply(*space, cop.data(), x, y,
                       &robber_policy.moves[space->state(x, y)]);
    }
  }
  return CaarResult{std::move(cop_table),
                    ValueTable(space, Opponent::kAdversarial, std::move(robber)),
                    std::move(cop_policy), std::move(robber_policy),
                    iterations};
}

GameValue CaptureTime(const CaarResult& result) {
  return BestStart(result.cop_to_move, /*average=*/false);
}

GameValue CaptureTime(const Graph& g, int k, std::int64_t state_cap) {
  return CaptureTime(CaarSolve(g, k, state_cap));
}

CadrResult CadrSolve(const Graph& g, int k, const SolveOptions& opts) {
  if (!(opts.tolerance > 0.0)) {
    throw std::invalid_argument("tolerance must be positive");
  }
  if (g.num_vertices() < 2) {
    throw std::invalid_argument(
        "drunk robber needs at least two vertices to walk on");
  }
  auto space = std::make_shared<const ConfigSpace>(g, k, opts.state_cap);
  const ConfigSpace& sp = *space;
  const int n = sp.n();
  const auto states = static_cast<std::size_t>(sp.num_states());
  const std::vector<double> inv_degree = InverseDegrees(g);

  std::vector<double> table(states, 0.0);
  std::vector<double> continuation;
  std::vector<double> next;
  if (opts.scheme == Scheme::kJacobi) {
    continuation.resize(states);
    next.resize(states);
  }
  if (opts.on_sweep) opts.on_sweep(0, table);

  double residual = kInfinite;
  std::int64_t sweep = 0;
  while (residual >= opts.tolerance) {
    if (sweep == opts.max_sweeps) throw NonConvergenceError(sweep, residual);
    ++sweep;
    residual = 0.0;
    if (opts.scheme == Scheme::kGaussSeidel) {
      // In place, configurations ascending then robber ascending. The cached
      // continuation row of every configuration other than x reflects the
      // live table: rows before x were refreshed right after their update
      // this sweep, rows after x have not changed since their last refresh.
      // Only the stay move (x2 == x) reads the row being updated, so it is
      // evaluated live.
      if (sweep == 1) continuation.assign(states, 0.0);
      for (int x = 0; x < sp.num_configs(); ++x) {
        auto successors = sp.successors(x);
        for (Vertex y = 0; y < n; ++y) {
          if (sp.occupied(x, y)) continue;
          double best = kInfinite;
          for (std::int32_t x2 : successors) {
            double v = x2 == x ? DrunkContinuation(sp, table.data(),
                                                   inv_degree, x2, y)
                               : continuation[sp.state(x2, y)];
            best = std::min(best, v);
          }
          double& cell = table[sp.state(x, y)];
          residual = std::max(residual, std::abs(1.0 + best - cell));
          cell = 1.0 + best;
        }
        for (Vertex y = 0; y < n; ++y) {
          continuation[sp.state(x, y)] =
              DrunkContinuation(sp, table.data(), inv_degree, x, y);
        }
      }
    } else {
      // Robber half-step first (it does not depend on the cops' origin),
      // then the cops' minimisation, both from the previous table.
      for (int x = 0; x < sp.num_configs(); ++x) {
        for (Vertex y = 0; y < n; ++y) {
          continuation[sp.state(x, y)] =
              DrunkContinuation(sp, table.data(), inv_degree, x, y);
        }
      }
      for (int x = 0; x < sp.num_configs(); ++x) {
        auto successors = sp.successors(x);
        for (Vertex y = 0; y < n; ++y) {
          const auto s = sp.state(x, y);
          if (sp.occupied(x, y)) {
            next[s] = 0.0;
            continue;
          }
          double best = kInfinite;
          for (std::int32_t x2 : successors) {
            best = std::min(best, continuation[sp.state(x2, y)]);
          }
          next[s] = 1.0 + best;
          residual = std::max(residual, std::abs(next[s] - table[s]));
        }
      }
      std::swap(table, next);
    }
    if (opts.on_sweep) opts.on_sweep(sweep, table);
  }

  ValueTable values(space, Opponent::kDrunk, std::move(table));
  FeedbackPolicy policy = ExtractPolicy(values);
  return CadrResult{std::move(values), std::move(policy), sweep, residual};
}

GameValue DrunkCaptureTime(const CadrResult& result) {
  return BestStart(result.values, /*average=*/true);
}

GameValue DrunkCaptureTime(const Graph& g, int k, const SolveOptions& opts) {
  if (g.num_vertices() == 1) return GameValue{0.0, {CopConfig(k, 0)}};
  return DrunkCaptureTime(CadrSolve(g, k, opts));
}

FeedbackPolicy ExtractPolicy(const ValueTable& table) {
  const ConfigSpace& space = table.space();
  const int n = space.n();
  std::vector<double> raw(table.values().begin(), table.values().end());
  std::vector<double> robber;
  std::vector<double> inv_degree;
  if (table.opponent() == Opponent::kAdversarial) {
    robber = RobberTable(space, raw);
  } else {
    inv_degree = InverseDegrees(space.graph());
  }

  std::vector<std::int32_t> moves(static_cast<std::size_t>(space.num_states()),
                                  FeedbackPolicy::kUndefinedMove);
  for (int x = 0; x < space.num_configs(); ++x) {
    for (Vertex y = 0; y < n; ++y) {
      auto& move = moves[space.state(x, y)];
      if (space.occupied(x, y)) {
        move = x;
        continue;
      }
      double best = kInfinite;
      for (std::int32_t x2 : space.successors(x)) {
        double v = table.opponent() == Opponent::kAdversarial
                       ? robber[space.state(x2, y)]
                       : DrunkContinuation(space, raw.data(), inv_degree, x2, y);
        if (v < best) {
          best = v;
          move = x2;
        }
      }
    }
  }
  return FeedbackPolicy(table.shared_space(), std::move(moves));
}

ValueTable EvaluatePolicy(const FeedbackPolicy& policy, double tolerance,
                          std::int64_t max_sweeps) {
  const ConfigSpace& space = policy.space();
  const int n = space.n();
  const std::vector<double> inv_degree = InverseDegrees(space.graph());
  std::vector<double> table(static_cast<std::size_t>(space.num_states()), 0.0);
  for (int x = 0; x < space.num_configs(); ++x) {
    for (Vertex y = 0; y < n; ++y) {
      if (!policy.defined(x, y)) table[space.state(x, y)] = kInfinite;
    }
  }
  std::vector<double> next(table.size());
  double residual = kInfinite;
  std::int64_t sweep = 0;
  while (residual >= tolerance) {
    if (sweep == max_sweeps) throw NonConvergenceError(sweep, residual);
    ++sweep;
    residual = 0.0;
    for (int x = 0; x < space.num_configs(); ++x) {
      for (Vertex y = 0; y < n; ++y) {
        const auto s = space.state(x, y);
        if (space.occupied(x, y)) {
          next[s] = 0.0;
        } else if (!policy.defined(x, y)) {
          next[s] = kInfinite;
        } else {
          next[s] = 1.0 + DrunkContinuation(space, table.data(), inv_degree,
                                            policy.next(x, y), y);
          if (std::isfinite(next[s])) {
            residual = std::max(residual, std::abs(next[s] - table[s]));
          }
        }
      }
    }
    std::swap(table, next);
  }
  return ValueTable(policy.shared_space(), Opponent::kDrunk, std::move(table));
}

CostOfDrunkenness ComputeCostOfDrunkenness(const Graph& g,
                                           const CostOptions& opts) {
  CostOfDrunkenness out;
  if (g.num_vertices() == 1) {
    out.cop_number = 1;
    out.capture_time = GameValue{0.0, {CopConfig{0}}};
    out.drunk_capture_time = out.capture_time;
    return out;
  }
  for (int k = 1; k <= opts.max_cops; ++k) {
    CheckStateBudget(g.num_vertices(), k, opts.solve.state_cap);
    CaarResult caar = CaarSolve(g, k, opts.solve.state_cap);
    GameValue ct = CaptureTime(caar);
    if (!std::isfinite(ct.value)) continue;
    CadrResult cadr = CadrSolve(g, k, opts.solve);
    out.cop_number = k;
    out.capture_time = std::move(ct);
    out.drunk_capture_time = DrunkCaptureTime(cadr);
    out.ratio = out.capture_time.value / out.drunk_capture_time.value;
    out.caar_iterations = caar.iterations;
    out.cadr_sweeps = cadr.sweeps;
    return out;
  }
  throw CopNumberNotFound(opts.max_cops);
}

}  // namespace copsrobbers
