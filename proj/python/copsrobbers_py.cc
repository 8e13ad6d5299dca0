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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "copsrobbers/chain.h"
#include "copsrobbers/errors.h"
#include "copsrobbers/graph.h"
#include "copsrobbers/io.h"
#include "copsrobbers/montecarlo.h"
#include "copsrobbers/solver.h"

namespace py = pybind11;
using namespace pybind11::literals;
namespace cr = copsrobbers;

namespace {

cr::SolveOptions Options(const std::string& scheme, double tolerance,
                         std::int64_t max_sweeps, std::int64_t state_cap) {
  cr::SolveOptions opts;
  if (scheme == "jacobi") {
    opts.scheme = cr::Scheme::kJacobi;
  } else if (scheme != "gauss-seidel") {
    throw std::invalid_argument("scheme must be 'gauss-seidel' or 'jacobi'");
  }
  opts.tolerance = tolerance;
  opts.max_sweeps = max_sweeps;
  opts.state_cap = state_cap;
  return opts;
}

cr::FixedStrategy Strategy(const cr::Graph& g,
                           std::vector<std::vector<cr::Vertex>> rounds) {
  cr::FixedStrategy s{std::move(rounds)};
  cr::ValidateStrategy(g, s);
  return s;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Cops-and-robbers capture-time solvers";

  py::register_exception<cr::InfeasibleSizeError>(
      m, "InfeasibleSizeError", PyExc_MemoryError);
  py::register_exception<cr::NonConvergenceError>(m, "NonConvergenceError",
                                                  PyExc_RuntimeError);
  py::register_exception<cr::NonterminatingStrategyError>(
      m, "NonterminatingStrategyError", PyExc_RuntimeError);
  py::register_exception<cr::CopNumberNotFound>(m, "CopNumberNotFound",
                                                PyExc_RuntimeError);

  py::class_<cr::Graph>(m, "Graph")
      .def(py::init([](int n, const std::vector<cr::Edge>& edges) {
             return cr::Graph(n, edges);
           }),
           "n"_a, "edges"_a)
      .def_property_readonly("num_vertices", &cr::Graph::num_vertices)
      .def_property_readonly("num_edges", &cr::Graph::num_edges)
      .def("edges", &cr::Graph::edges)
      .def("neighbors",
           [](const cr::Graph& g, cr::Vertex v) {
             if (v < 0 || v >= g.num_vertices()) {
               throw py::index_error("vertex out of range");
             }
             auto nb = g.neighbors(v);
             return std::vector<cr::Vertex>(nb.begin(), nb.end());
           })
      .def("relabeled",
           [](const cr::Graph& g, const std::vector<cr::Vertex>& perm) {
             return g.relabeled(perm);
           })
      .def("__eq__", [](const cr::Graph& a, const cr::Graph& b) { return a == b; })
      .def("__repr__", [](const cr::Graph& g) {
        return "Graph(n=" + std::to_string(g.num_vertices()) +
               ", m=" + std::to_string(g.num_edges()) + ")";
      });

  m.def("path", &cr::Path, "n"_a);
  m.def("cycle", &cr::Cycle, "n"_a);
  m.def("complete_tree", &cr::CompleteTree, "d"_a, "depth"_a);
  m.def("grid", &cr::Grid, "n"_a);
  m.def("complete", &cr::Complete, "n"_a);
  m.def("barbell", &cr::Barbell, "n"_a, "c"_a);
  m.def("lollipop", &cr::Lollipop, "n"_a, "c"_a);
  m.def("cartesian_product", &cr::CartesianProduct, "g"_a, "h"_a);
  m.def("read_edge_list", &cr::ReadEdgeListFile, "path"_a);
  m.def("validate", [](int n, const std::vector<cr::Edge>& edges) {
    cr::Diagnostics d = cr::Validate(n, edges);
    return py::dict("connected"_a = d.connected, "diameter"_a = d.diameter,
                    "max_degree"_a = d.max_degree);
  }, "n"_a, "edges"_a);

  m.def("capture_time",
        [](const cr::Graph& g, int k, std::int64_t state_cap) {
          py::gil_scoped_release release;
          return cr::CaptureTime(g, k, state_cap).value;
        },
        "g"_a, "k"_a, py::kw_only(), "state_cap"_a = cr::kDefaultStateCap);

  m.def("drunk_capture_time",
        [](const cr::Graph& g, int k, const std::string& scheme,
           double tolerance, std::int64_t max_sweeps, std::int64_t state_cap) {
          cr::SolveOptions opts = Options(scheme, tolerance, max_sweeps, state_cap);
          py::gil_scoped_release release;
          return cr::DrunkCaptureTime(g, k, opts).value;
        },
        "g"_a, "k"_a, py::kw_only(), "scheme"_a = "gauss-seidel",
        "tolerance"_a = 1e-10, "max_sweeps"_a = 1'000'000,
        "state_cap"_a = cr::kDefaultStateCap);

  m.def("cost_of_drunkenness",
        [](const cr::Graph& g, int max_cops, std::int64_t state_cap) {
          cr::CostOptions opts;
          opts.max_cops = max_cops;
          opts.solve.state_cap = state_cap;
          cr::CostOfDrunkenness c;
          {
            py::gil_scoped_release release;
            c = cr::ComputeCostOfDrunkenness(g, opts);
          }
          return py::dict("F"_a = c.ratio, "ct"_a = c.capture_time.value,
                          "dct"_a = c.drunk_capture_time.value,
                          "cop_number"_a = c.cop_number);
        },
        "g"_a, py::kw_only(), "max_cops"_a = 3,
        "state_cap"_a = cr::kDefaultStateCap);

  m.def("fixed_strategy_expected_time",
        [](const cr::Graph& g, std::vector<std::vector<cr::Vertex>> rounds,
           std::optional<std::int64_t> max_rounds) {
          cr::FixedStrategy s = Strategy(g, std::move(rounds));
          return cr::FixedStrategyExpectedTime(
              g, s, max_rounds.value_or(std::max<std::int64_t>(
                        cr::DefaultMaxRounds(g), std::ssize(s.rounds))));
        },
        "g"_a, "rounds"_a, py::kw_only(), "max_rounds"_a = py::none());

  m.def("adversarial_survival_time",
        [](const cr::Graph& g, std::vector<std::vector<cr::Vertex>> rounds) {
          return cr::AdversarialSurvivalTime(g, Strategy(g, std::move(rounds)));
        },
        "g"_a, "rounds"_a);

  m.def("path_sweep", [](int n) { return cr::PathSweep(n).rounds; }, "n"_a);
  m.def("cycle_opposite_sweep",
        [](int n) { return cr::CycleOppositeSweep(n).rounds; }, "n"_a);

  m.def("_simulate_policy",
        [](const cr::Graph& g, int k, std::int64_t trials, std::uint64_t seed,
           std::optional<std::int64_t> max_rounds) {
          py::gil_scoped_release release;
          cr::CadrResult r = cr::CadrSolve(g, k);
          cr::GameValue v = cr::DrunkCaptureTime(r);
          int start = r.values.space().index_of(v.optimal_starts.front());
          return cr::SimReportJson(cr::SimulateDrunkPursuit(
              r.policy, start, trials, seed,
              max_rounds.value_or(cr::DefaultCensorRounds(g))));
        },
        "g"_a, "k"_a, "trials"_a, "seed"_a, "max_rounds"_a);

  m.def("_simulate_strategy",
        [](const cr::Graph& g, std::vector<std::vector<cr::Vertex>> rounds,
           std::int64_t trials, std::uint64_t seed,
           std::optional<std::int64_t> max_rounds) {
          cr::FixedStrategy s = Strategy(g, std::move(rounds));
          py::gil_scoped_release release;
          return cr::SimReportJson(cr::SimulateDrunkPursuit(
              g, s, trials, seed, max_rounds.value_or(cr::DefaultCensorRounds(g))));
        },
        "g"_a, "rounds"_a, "trials"_a, "seed"_a, "max_rounds"_a);

  m.def("_simulate_random_cops",
        [](const cr::Graph& g, int k, const std::string& evader,
           std::int64_t trials, std::uint64_t seed,
           std::optional<std::int64_t> max_rounds) {
          cr::Evader e = cr::ParseEvader(evader);
          py::gil_scoped_release release;
          return cr::SimReportJson(cr::SimulateRandomCops(
              g, k, e, trials, seed, max_rounds.value_or(cr::DefaultCensorRounds(g))));
        },
        "g"_a, "k"_a, "evader"_a, "trials"_a, "seed"_a, "max_rounds"_a);

  m.def("_walk_deviation_check",
        [](int n, double c, std::int64_t trials, std::uint64_t seed) {
          py::gil_scoped_release release;
          return cr::WalkDeviationJson(cr::WalkDeviationCheck(n, c, trials, seed), seed);
        },
        "n"_a, "c"_a, "trials"_a, "seed"_a);
}
