# Copyright 2026 The copsrobbers Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Capture times of adversarial and drunk robbers on graphs."""

import json

from ._core import (
    CopNumberNotFound,
    Graph,
    InfeasibleSizeError,
    NonConvergenceError,
    NonterminatingStrategyError,
    adversarial_survival_time,
    barbell,
    capture_time,
    cartesian_product,
    complete,
    complete_tree,
    cost_of_drunkenness,
    cycle,
    cycle_opposite_sweep,
    drunk_capture_time,
    fixed_strategy_expected_time,
    grid,
    lollipop,
    path,
    path_sweep,
    read_edge_list,
    validate,
)
from . import _core

__all__ = [
    "CopNumberNotFound",
    "Graph",
    "InfeasibleSizeError",
    "NonConvergenceError",
    "NonterminatingStrategyError",
    "adversarial_survival_time",
    "barbell",
    "capture_time",
    "cartesian_product",
    "complete",
    "complete_tree",
    "cost_of_drunkenness",
    "cycle",
    "cycle_opposite_sweep",
    "drunk_capture_time",
    "fixed_strategy_expected_time",
    "grid",
    "lollipop",
    "path",
    "path_sweep",
    "read_edge_list",
    "simulate",
    "validate",
    "walk_deviation_check",
]


def simulate(g, mode="policy", *, k=1, trials=10000, seed=1, strategy=None,
             evader="max-distance-greedy", max_rounds=None):
    """Monte Carlo pursuit; returns the simulation report as a dict.

    mode is "policy" (optimal feedback policy against the drunk robber),
    "strategy" (a fixed list of cop rounds) or "random-cops".
    """
    if mode == "policy":
        text = _core._simulate_policy(g, k, trials, seed, max_rounds)
    elif mode == "strategy":
        if strategy is None:
            raise ValueError("strategy mode needs a list of rounds")
        text = _core._simulate_strategy(g, strategy, trials, seed, max_rounds)
    elif mode == "random-cops":
        text = _core._simulate_random_cops(g, k, evader, trials, seed, max_rounds)
    else:
        raise ValueError(f"unknown simulation mode {mode!r}")
    return json.loads(text)


def walk_deviation_check(n, c, trials, seed=1):
    return json.loads(_core._walk_deviation_check(n, c, trials, seed))
