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


#include <algorithm>
#include <limits>
#include <set>

#include "copsrobbers/config_space.h"
#include "copsrobbers/errors.h"
#include "doctest.h"

namespace cr = copsrobbers;

TEST_CASE("configuration counts are multiset coefficients") {
  CHECK(cr::CountConfigs(5, 1) == 5);
  CHECK(cr::CountConfigs(5, 2) == 15);
  CHECK(cr::CountConfigs(100, 2) == 5050);
  CHECK(cr::CountStates(200, 2) == 20100 * 200);
  // Saturates instead of overflowing.
  CHECK(cr::CountConfigs(1 << 20, 8) == std::numeric_limits<std::int64_t>::max());
  CHECK_THROWS_AS(cr::CheckStateBudget(1000, 3, cr::kDefaultStateCap),
                  cr::InfeasibleSizeError);
  CHECK_NOTHROW(cr::CheckStateBudget(200, 2, cr::kDefaultStateCap));
}

TEST_CASE("enumeration is lexicographic and indexable") {
  cr::ConfigSpace space(cr::Cycle(6), 3);
  CHECK(space.num_configs() == 56);
  for (int i = 0; i < space.num_configs(); ++i) {
    auto c = space.config(i);
    CHECK(std::is_sorted(c.begin(), c.end()));
    CHECK(space.index_of(c) == i);
    if (i > 0) {
      auto p = space.config(i - 1);
      CHECK(std::lexicographical_compare(p.begin(), p.end(), c.begin(), c.end()));
    }
  }
  std::vector<cr::Vertex> unsorted{4, 0, 2};
  CHECK(space.config_vector(space.index_of(unsorted)) == cr::CopConfig{0, 2, 4});
  std::vector<cr::Vertex> wrong_size{1, 2};
  CHECK_THROWS_AS(space.index_of(wrong_size), std::invalid_argument);
  std::vector<cr::Vertex> out_of_range{1, 2, 9};
  CHECK_THROWS_AS(space.index_of(out_of_range), std::invalid_argument);
}

TEST_CASE("successors are all canonical joint moves") {
  cr::Graph g = cr::Path(5);
  cr::ConfigSpace space(g, 2);
  for (int i = 0; i < space.num_configs(); ++i) {
    auto c = space.config(i);
    std::set<cr::CopConfig> expected;
    for (cr::Vertex a : g.closed_neighbors(c[0]))
      for (cr::Vertex b : g.closed_neighbors(c[1])) expected.insert(cr::Canonical({a, b}));
    auto succ = space.successors(i);
    CHECK(std::is_sorted(succ.begin(), succ.end()));
    CHECK(std::adjacent_find(succ.begin(), succ.end()) == succ.end());
    std::set<cr::CopConfig> got;
    for (auto s : succ) got.insert(space.config_vector(s));
    CHECK(got == expected);
    CHECK(std::binary_search(succ.begin(), succ.end(), i));
  }
}

TEST_CASE("occupancy and state indexing") {
  cr::ConfigSpace space(cr::Cycle(5), 2);
  std::vector<cr::Vertex> cops{1, 3};
  int idx = space.index_of(cops);
  for (cr::Vertex v = 0; v < 5; ++v) CHECK(space.occupied(idx, v) == (v == 1 || v == 3));
  CHECK(space.state(idx, 4) == idx * 5 + 4);
  CHECK_THROWS_AS(cr::ConfigSpace(cr::Cycle(50), 3, 1000), cr::InfeasibleSizeError);
  CHECK_THROWS_AS(cr::ConfigSpace(cr::Cycle(5), 0), std::invalid_argument);
}
