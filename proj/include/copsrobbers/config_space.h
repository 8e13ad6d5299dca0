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

#ifndef COPSROBBERS_CONFIG_SPACE_H_
#define COPSROBBERS_CONFIG_SPACE_H_

#include <cstdint>
#include <span>
#include <vector>

#include "copsrobbers/graph.h"

namespace copsrobbers {

// A canonical cop configuration: k vertices in nondecreasing order. Cops are
// interchangeable, so (3, 1) and (1, 3) are the same configuration.
using CopConfig = std::vector<Vertex>;

CopConfig Canonical(std::vector<Vertex> cops);

constexpr std::int64_t kDefaultStateCap = 5'000'000;

// Number of canonical k-configurations on n vertices, C(n+k-1, k); saturates
// at INT64_MAX.
std::int64_t CountConfigs(int n, int k);

// configs * n, saturating.
std::int64_t CountStates(int n, int k);

// Throws InfeasibleSizeError when CountStates(n, k) > cap.
void CheckStateBudget(int n, int k, std::int64_t cap);

// The joint cop configurations for k cops on a graph, in lexicographic order,
// with the per-configuration successor lists (every cop steps inside its
// closed neighbourhood, then the tuple is re-sorted). A game state is the pair
// (config index, robber vertex), flattened to config * n + robber.
class ConfigSpace {
 public:
  ConfigSpace(const Graph& g, int k, std::int64_t state_cap = kDefaultStateCap);

  const Graph& graph() const { return graph_; }
  int k() const { return k_; }
  int n() const { return n_; }
  int num_configs() const { return num_configs_; }
  std::int64_t num_states() const {
    return static_cast<std::int64_t>(num_configs_) * n_;
  }

  std::span<const Vertex> config(int index) const {
    return {configs_.data() + static_cast<std::size_t>(index) * k_,
            static_cast<std::size_t>(k_)};
  }
  CopConfig config_vector(int index) const {
    auto c = config(index);
    return {c.begin(), c.end()};
  }

  // Index of a configuration; the input need not be sorted. Throws
  // std::invalid_argument on wrong size or out-of-range vertices.
  int index_of(std::span<const Vertex> cops) const;

  // Successor configurations of `index`, ascending (hence lexicographic).
  std::span<const std::int32_t> successors(int index) const {
    return {successor_data_.data() + successor_offsets_[index],
            successor_data_.data() + successor_offsets_[index + 1]};
  }

  // True when some cop of configuration `index` sits on `v`.
  bool occupied(int index, Vertex v) const {
    return occupied_[static_cast<std::size_t>(index) * n_ + v] != 0;
  }

  std::int64_t state(int config_index, Vertex robber) const {
    return static_cast<std::int64_t>(config_index) * n_ + robber;
  }

 private:
  std::int64_t ColexRank(std::span<const Vertex> sorted) const;

  Graph graph_;
  int n_;
  int k_;
  int num_configs_ = 0;
  std::vector<Vertex> configs_;
  std::vector<std::int32_t> lex_of_colex_;
  std::vector<std::vector<std::int64_t>> binomial_;
  std::vector<std::int64_t> successor_offsets_;
  std::vector<std::int32_t> successor_data_;
  std::vector<std::uint8_t> occupied_;
};

}  // namespace copsrobbers

#endif  // COPSROBBERS_CONFIG_SPACE_H_
