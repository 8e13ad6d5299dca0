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

import json
import math
import os
import pathlib
import subprocess

import jsonschema
import pytest
import referencing

import copsrobbers as cr

SCHEMA_DIR = pathlib.Path(
    os.environ.get("COPSROBBERS_SCHEMA_DIR",
                   pathlib.Path(__file__).resolve().parents[2] / "schema"))


@pytest.fixture(scope="module")
def report_schema():
    return json.loads((SCHEMA_DIR / "simreport.schema.json").read_text())


def test_generators():
    assert cr.path(7).num_edges == 6
    assert cr.cycle(9).num_edges == 9
    assert cr.complete_tree(2, 6).num_vertices == 127
    assert cr.grid(4).num_edges == 24
    assert cr.barbell(100, 1.0).num_vertices == 298
    assert cr.lollipop(150, 0.3).num_vertices == 194
    g = cr.Graph(3, [(0, 1), (1, 2)])
    assert g == cr.path(3)
    assert g.neighbors(1) == [0, 2]
    assert cr.validate(4, [(0, 1), (2, 3)])["connected"] is False


def test_bad_graphs_raise_value_error():
    with pytest.raises(ValueError):
        cr.Graph(3, [(0, 1)])
    with pytest.raises(ValueError):
        cr.cycle(2)


def test_capture_times():
    assert cr.capture_time(cr.path(9), 1) == 4
    assert cr.capture_time(cr.cycle(11), 2) == 3
    assert math.isinf(cr.capture_time(cr.cycle(4), 1))
    assert cr.drunk_capture_time(cr.path(3), 1) == pytest.approx(2 / 3)
    jac = cr.drunk_capture_time(cr.grid(3), 1, scheme="jacobi", tolerance=1e-12)
    gs = cr.drunk_capture_time(cr.grid(3), 1, tolerance=1e-12)
    assert jac == pytest.approx(gs, abs=1e-8)


def test_cost_of_drunkenness():
    cod = cr.cost_of_drunkenness(cr.path(3))
    assert cod["F"] == pytest.approx(1.5)
    assert cod["cop_number"] == 1
    with pytest.raises(cr.CopNumberNotFound):
        cr.cost_of_drunkenness(cr.cycle(5), max_cops=1)


def test_fixed_strategies():
    g = cr.path(5)
    sweep = cr.path_sweep(5)
    assert sweep == [[0], [1], [2], [3], [4]]
    assert cr.fixed_strategy_expected_time(g, sweep) == pytest.approx(31 / 20, abs=1e-12)
    assert cr.adversarial_survival_time(g, sweep) == 4
    assert cr.adversarial_survival_time(cr.cycle(5), [[0]]) is None
    with pytest.raises(cr.NonterminatingStrategyError):
        cr.fixed_strategy_expected_time(cr.cycle(6), [[0]], max_rounds=10)
    with pytest.raises(ValueError):
        cr.fixed_strategy_expected_time(g, [[0], [3]])


def test_state_cap():
    with pytest.raises(cr.InfeasibleSizeError):
        cr.drunk_capture_time(cr.cycle(60), 3, state_cap=1000)


def test_simulation_reports_validate(report_schema):
    g = cr.grid(3)
    policy = cr.simulate(g, "policy", k=1, trials=5000, seed=3)
    jsonschema.validate(policy, report_schema)
    exact = cr.drunk_capture_time(g, 1)
    assert abs(policy["mean"] - exact) <= 3 * policy["stderr"]
    assert cr.simulate(g, "policy", k=1, trials=5000, seed=3) == policy

    strat = cr.simulate(cr.path(5), "strategy", strategy=cr.path_sweep(5), trials=2000)
    jsonschema.validate(strat, report_schema)
    cops = cr.simulate(cr.cycle(8), "random-cops", k=2, trials=500,
                       evader="uniform-random")
    jsonschema.validate(cops, report_schema)
    assert sum(cops["histogram"]) + cops["censored"] + cops["aborted"] == 500


def test_walk_deviation():
    w = cr.walk_deviation_check(1000, 3.0, 2000, seed=5)
    assert w["exceedance"] <= 3.6e-4
    assert w["trials"] == 2000


def _registry():
    resources = []
    for name in ("simreport.schema.json", "cli-output.schema.json"):
        contents = json.loads((SCHEMA_DIR / name).read_text())
        resources.append((contents["$id"], referencing.Resource.from_contents(contents)))
    return referencing.Registry().with_resources(resources)


CLI_RUNS = [
    (["ct", "--family", "path", "--n", "9", "--k", "1", "--all-starts"], 0),
    (["ct", "--family", "cycle", "--n", "4", "--k", "1"], 5),
    (["dct", "--family", "grid", "--n", "3", "--k", "2"], 0),
    (["cod", "--family", "lollipop", "--n", "8", "--c", "0.5"], 0),
    (["eval-strategy", "--family", "path", "--n", "4", "--strategy", "{sweep}"], 0),
    (["eval-strategy", "--family", "path", "--n", "4", "--strategy", "{sweep}",
      "--mode", "adversarial"], 0),
    (["simulate", "--family", "cycle", "--n", "6", "--mode", "random-cops", "--k", "2",
      "--trials", "200"], 0),
    (["simulate", "--mode", "walk", "--walk-n", "200", "--trials", "200"], 0),
    (["graph", "--family", "tree", "--d", "2", "--depth", "2", "--validate"], 0),
]


@pytest.mark.parametrize("args,code", CLI_RUNS,
                         ids=[f"{a[0]}-{i}" for i, (a, _) in enumerate(CLI_RUNS)])
def test_cli_json_matches_schema(args, code, tmp_path):
    tool = os.environ.get("COPSROBBERS_TOOL")
    if not tool:
        pytest.skip("COPSROBBERS_TOOL not set")
    sweep = tmp_path / "sweep.txt"
    sweep.write_text("0\n1\n2\n3\n")
    argv = [tool] + [a.replace("{sweep}", str(sweep)) for a in args] + ["--json"]
    proc = subprocess.run(argv, capture_output=True, text=True, check=False)
    assert proc.returncode == code, proc.stderr
    schema = json.loads((SCHEMA_DIR / "cli-output.schema.json").read_text())
    validator = jsonschema.Draft202012Validator(schema, registry=_registry())
    validator.validate(json.loads(proc.stdout))
