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

#include "copsrobbers/config_space.h"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "copsrobbers/errors.h"

namespace copsrobbers {
namespace {

constexpr std::int64_t kSaturated = std::numeric_limits<std::int64_t>::max();

}  // namespace

CopConfig Canonical(std::vector<Vertex> cops) {
  std::sort(cops.begin(), cops.end());
  return cops;
}

std::int64_t CountConfigs(int n, int k) {
  if (n < 1 || k < 1) return 0;
  // C(n+k-1, k), built as a running product that stays integral.
  unsigned __int128 result = 1;
  for (int i = 0; i < k; ++i) {
    result = result * static_cast<unsigned>(n + i) / static_cast<unsigned>(i + 1);
    if (result > static_cast<unsigned __int128>(kSaturated)) return kSaturated;
  }
  return static_cast<std::int64_t>(result);
}

std::int64_t CountStates(int n, int k) {
  std::int64_t configs = CountConfigs(n, k);
  if (configs > kSaturated / std::max(n, 1)) return kSaturated;
  return configs * n;
}

void CheckStateBudget(int n, int k, std::int64_t cap) {
  std::int64_t states = CountStates(n, k);
  if (states > cap) throw InfeasibleSizeError(states, cap);
}

ConfigSpace::ConfigSpace(const Graph& g, int k, std::int64_t state_cap)
    : graph_(g), n_(g.num_vertices()), k_(k) {
  if (k < 1) {
    throw std::invalid_argument("need at least one cop, got k=" +
                                std::to_string(k));
  }
  CheckStateBudget(n_, k_, std::min<std::int64_t>(
                               state_cap, std::numeric_limits<int>::max()));
  num_configs_ = static_cast<int>(CountConfigs(n_, k_));

  binomial_.assign(n_ + k_, std::vector<std::int64_t>(k_ + 1, 0));
  for (int m = 0; m < n_ + k_; ++m) {
    binomial_[m][0] = 1;
    for (int j = 1; j <= std::min(m, k_); ++j) {
      binomial_[m][j] = binomial_[m - 1][j - 1] +
                        (j <= m - 1 ? binomial_[m - 1][j] : 0);
    }
  }

  // Lexicographic enumeration of nondecreasing tuples.
  configs_.reserve(static_cast<std::size_t>(num_configs_) * k_);
  lex_of_colex_.assign(num_configs_, -1);
  std::vector<Vertex> current(k_, 0);
  for (int index = 0; index < num_configs_; ++index) {
    configs_.insert(configs_.end(), current.begin(), current.end());
    lex_of_colex_[ColexRank(current)] = index;
    int i = k_ - 1;
    while (i >= 0 && current[i] == n_ - 1) --i;
    if (i < 0) break;
    ++current[i];
    for (int j = i + 1; j < k_; ++j) current[j] = current[i];
  }

  occupied_.assign(static_cast<std::size_t>(num_configs_) * n_, 0);
  for (int index = 0; index < num_configs_; ++index) {
    for (Vertex v : config(index)) {
      occupied_[static_cast<std::size_t>(index) * n_ + v] = 1;
    }
  }

  std::vector<std::vector<Vertex>> closed(n_);
  for (Vertex v = 0; v < n_; ++v) closed[v] = graph_.closed_neighbors(v);

  successor_offsets_.reserve(num_configs_ + 1);
  successor_offsets_.push_back(0);
  std::vector<std::int32_t> found;
  std::vector<Vertex> tuple(k_);
  std::vector<std::size_t> digit(k_);
  for (int index = 0; index < num_configs_; ++index) {
    auto cops = config(index);
    found.clear();
    std::fill(digit.begin(), digit.end(), 0);
    // Odometer over the product of closed neighbourhoods.
    while (true) {
      for (int i = 0; i < k_; ++i) tuple[i] = closed[cops[i]][digit[i]];
      std::vector<Vertex> sorted = tuple;
      std::sort(sorted.begin(), sorted.end());
      found.push_back(lex_of_colex_[ColexRank(sorted)]);
      int i = k_ - 1;
      while (i >= 0 && ++digit[i] == closed[cops[i]].size()) {
        digit[i] = 0;
        --i;
      }
      if (i < 0) break;
    }
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    successor_data_.insert(successor_data_.end(), found.begin(), found.end());
    successor_offsets_.push_back(
        static_cast<std::int64_t>(successor_data_.size()));
  }
}

std::int64_t ConfigSpace::ColexRank(std::span<const Vertex> sorted) const {
  std::int64_t rank = 0;
  for (int i = 0; i < k_; ++i) rank += binomial_[sorted[i] + i][i + 1];
  return rank;
}

int ConfigSpace::index_of(std::span<const Vertex> cops) const {
  if (static_cast<int>(cops.size()) != k_) {
    throw std::invalid_argument("configuration has " +
                                std::to_string(cops.size()) +
                                " cops, expected " + std::to_string(k_));
  }
  std::vector<Vertex> sorted(cops.begin(), cops.end());
  for (Vertex v : sorted) {
    if (v < 0 || v >= n_) {
      throw std::invalid_argument("cop vertex " + std::to_string(v) +
                                  " out of range");
    }
  }
  std::sort(sorted.begin(), sorted.end());
  return lex_of_colex_[ColexRank(sorted)];
}

}  // namespace copsrobbers
