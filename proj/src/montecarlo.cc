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

#include "copsrobbers/montecarlo.h"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace copsrobbers {
namespace {

std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Streaming mean and variance (Welford) plus the histogram.
class Tally {
 public:
  explicit Tally(std::int64_t trials, std::uint64_t seed) {
    report_.trials = trials;
    report_.seed = seed;
  }
  void Record(std::int64_t t) {
    ++count_;
    const double delta = static_cast<double>(t) - mean_;
    mean_ += delta / static_cast<double>(count_);
    m2_ += delta * (static_cast<double>(t) - mean_);
    report_.max = std::max(report_.max, t);
    if (static_cast<std::size_t>(t) >= report_.histogram.size()) {
      report_.histogram.resize(t + 1, 0);
    }
    ++report_.histogram[t];
  }
  void Censor() { ++report_.censored; }
  void Abort(const std::string& why) {
    if (report_.aborted++ == 0) report_.diagnostic = why;
  }
  SimReport Finish() {
    report_.mean = count_ > 0 ? mean_ : 0.0;
    report_.standard_error =
        count_ > 1 ? std::sqrt(m2_ / static_cast<double>(count_ - 1) /
                               static_cast<double>(count_))
                   : 0.0;
    return report_;
  }

 private:
  SimReport report_;
  std::int64_t count_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

void CheckTrials(std::int64_t trials) {
  if (trials < 1) throw std::invalid_argument("need at least one trial");
}

Vertex UniformNeighbor(const Graph& g, Vertex y, TrialRng& rng) {
  auto nbrs = g.neighbors(y);
  return nbrs[rng.below(nbrs.size())];
}

}  // namespace

TrialRng::TrialRng(std::uint64_t master_seed, std::uint64_t trial)
    : engine_(SplitMix64(master_seed ^ SplitMix64(trial))) {}

std::uint64_t TrialRng::bits() { return engine_(); }

std::uint64_t TrialRng::below(std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  while (true) {
    std::uint64_t r = engine_();
    if (r >= threshold) return r % bound;
  }
}

SimReport SimulateDrunkPursuit(const FeedbackPolicy& policy, int start_config,
                               std::int64_t trials, std::uint64_t seed,
                               std::int64_t max_rounds) {
  CheckTrials(trials);
  const ConfigSpace& space = policy.space();
  const Graph& g = space.graph();
  const int n = space.n();
  if (start_config < 0 || start_config >= space.num_configs()) {
    throw std::invalid_argument("start configuration out of range");
  }
  Tally tally(trials, seed);
  for (std::int64_t trial = 0; trial < trials; ++trial) {
    TrialRng rng(seed, static_cast<std::uint64_t>(trial));
    int x = start_config;
    Vertex y = static_cast<Vertex>(rng.below(n));
    if (space.occupied(x, y)) {
      tally.Record(0);
      continue;
    }
    bool done = false;
    for (std::int64_t t = 1; t <= max_rounds && !done; ++t) {
      std::int32_t move = policy.next(x, y);
      if (move == FeedbackPolicy::kUndefinedMove) {
        tally.Abort("policy undefined at configuration index " +
                    std::to_string(x) + ", robber " + std::to_string(y));
        done = true;
        break;
      }
      assert(std::binary_search(space.successors(x).begin(),
                                space.successors(x).end(), move));
      x = move;
      if (space.occupied(x, y)) {
        tally.Record(t);
        done = true;
        break;
      }
      const Vertex from = y;
      y = UniformNeighbor(g, y, rng);
      assert(g.adjacent(from, y));
      (void)from;
      if (space.occupied(x, y)) {
        tally.Record(t);
        done = true;
      }
    }
    if (!done) tally.Censor();
  }
  return tally.Finish();
}

SimReport SimulateDrunkPursuit(const Graph& g, const FixedStrategy& strategy,
                               std::int64_t trials, std::uint64_t seed,
                               std::int64_t max_rounds) {
  CheckTrials(trials);
  ValidateStrategy(g, strategy);
  const int n = g.num_vertices();
  std::vector<std::vector<std::uint8_t>> occupied;
  for (const auto& round : strategy.rounds) {
    auto& row = occupied.emplace_back(n, 0);
    for (Vertex c : round) row[c] = 1;
  }
  auto cop_on = [&](std::int64_t t, Vertex v) {
    auto i = std::min<std::int64_t>(t, std::ssize(occupied) - 1);
    return occupied[i][v] != 0;
  };

  Tally tally(trials, seed);
  for (std::int64_t trial = 0; trial < trials; ++trial) {
    TrialRng rng(seed, static_cast<std::uint64_t>(trial));
    Vertex y = static_cast<Vertex>(rng.below(n));
    if (cop_on(0, y)) {
      tally.Record(0);
      continue;
    }
    bool done = false;
    for (std::int64_t t = 1; t <= max_rounds; ++t) {
      if (cop_on(t, y)) {
        tally.Record(t);
        done = true;
        break;
      }
      y = UniformNeighbor(g, y, rng);
      if (cop_on(t, y)) {
        tally.Record(t);
        done = true;
        break;
      }
    }
    if (!done) tally.Censor();
  }
  return tally.Finish();
}

Evader ParseEvader(const std::string& name) {
  if (name == "max-distance-greedy" || name == "greedy") {
    return Evader::kMaxDistanceGreedy;
  }
  if (name == "uniform-random" || name == "uniform") {
    return Evader::kUniformRandom;
  }
  throw std::invalid_argument("unknown evader '" + name + "'");
}

std::string EvaderName(Evader evader) {
  return evader == Evader::kMaxDistanceGreedy ? "max-distance-greedy"
                                              : "uniform-random";
}

SimReport SimulateRandomCops(const Graph& g, int k, Evader evader,
                             std::int64_t trials, std::uint64_t seed,
                             std::int64_t max_rounds,
                             std::vector<Vertex> start) {
  CheckTrials(trials);
  const int n = g.num_vertices();
  if (k < 1) throw std::invalid_argument("need at least one cop");
  if (start.empty()) {
    for (int i = 0; i < k; ++i) start.push_back(static_cast<Vertex>(i % n));
  }
  if (static_cast<int>(start.size()) != k) {
    throw std::invalid_argument("start configuration must list k vertices");
  }
  for (Vertex v : start) {
    if (v < 0 || v >= n) throw std::invalid_argument("start vertex out of range");
  }

  std::vector<std::vector<Vertex>> closed(n);
  for (Vertex v = 0; v < n; ++v) closed[v] = g.closed_neighbors(v);
  std::vector<int> dist;
  if (evader == Evader::kMaxDistanceGreedy) dist = g.all_pairs_distances();

  auto nearest_cop = [&](const std::vector<Vertex>& cops, Vertex v) {
    int best = std::numeric_limits<int>::max();
    for (Vertex c : cops) best = std::min(best, dist[std::size_t(c) * n + v]);
    return best;
  };
  auto farthest = [&](const std::vector<Vertex>& cops,
                      std::span<const Vertex> candidates) {
    Vertex choice = candidates.front();
    int best = -1;
    for (Vertex v : candidates) {
      int d = nearest_cop(cops, v);
      if (d > best) {
        best = d;
        choice = v;
      }
    }
    return choice;
  };
  auto caught = [](const std::vector<Vertex>& cops, Vertex y) {
    return std::find(cops.begin(), cops.end(), y) != cops.end();
  };

  std::vector<Vertex> everyone(n);
  for (Vertex v = 0; v < n; ++v) everyone[v] = v;

  Tally tally(trials, seed);
  for (std::int64_t trial = 0; trial < trials; ++trial) {
    TrialRng rng(seed, static_cast<std::uint64_t>(trial));
    std::vector<Vertex> cops = start;
    Vertex y = evader == Evader::kMaxDistanceGreedy
                   ? farthest(cops, everyone)
                   : static_cast<Vertex>(rng.below(n));
    if (caught(cops, y)) {
      tally.Record(0);
      continue;
    }
    bool done = false;
    for (std::int64_t t = 1; t <= max_rounds; ++t) {
      for (Vertex& c : cops) {
        const auto& options = closed[c];
        c = options[rng.below(options.size())];
      }
      if (caught(cops, y)) {
        tally.Record(t);
        done = true;
        break;
      }
      if (n > 1) {
        y = evader == Evader::kMaxDistanceGreedy ? farthest(cops, closed[y])
                                                 : UniformNeighbor(g, y, rng);
      }
      if (caught(cops, y)) {
        tally.Record(t);
        done = true;
        break;
      }
    }
    if (!done) tally.Censor();
  }
  return tally.Finish();
}

std::int64_t DefaultCensorRounds(const Graph& g) {
  return static_cast<std::int64_t>(
      std::min(100.0 * StationaryCopBound(g), 1e6));
}

WalkDeviation WalkDeviationCheck(int n, double c, std::int64_t trials,
                                 std::uint64_t seed) {
  CheckTrials(trials);
  if (n < 1) throw std::invalid_argument("walk length must be >= 1");
  if (!(c > 2.0)) throw std::invalid_argument("c must exceed 2");
  WalkDeviation out;
  out.trials = trials;
  out.threshold = c * std::sqrt(n * std::log(static_cast<double>(n)));
  out.bound = 2.0 * std::pow(static_cast<double>(n), 1.0 - c * c / 4.0);
  for (std::int64_t trial = 0; trial < trials; ++trial) {
    TrialRng rng(seed, static_cast<std::uint64_t>(trial));
    std::int64_t position = 0;
    std::uint64_t word = 0;
    for (int t = 0; t < n; ++t) {
      if (t % 64 == 0) word = rng.bits();
      position += (word & 1) ? 1 : -1;
      word >>= 1;
      if (std::abs(static_cast<double>(position)) > out.threshold) {
        ++out.exceeded;
        break;
      }
    }
  }
  out.exceedance = static_cast<double>(out.exceeded) / trials;
  return out;
}

}  // namespace copsrobbers
