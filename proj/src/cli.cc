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

#include "copsrobbers/cli.h"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <future>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "copsrobbers/chain.h"
#include "copsrobbers/config_space.h"
#include "copsrobbers/errors.h"
#include "copsrobbers/graph.h"
#include "copsrobbers/io.h"
#include "copsrobbers/montecarlo.h"
#include "copsrobbers/solver.h"
#include "json.hpp"

namespace copsrobbers {
namespace {

using Json = nlohmann::json;

// ---------------------------------------------------------------------------
// Shared option groups.

struct GraphSource {
  std::string family;
  std::string file;
  int n = 0;
  int d = 2;
  int depth = 0;
  double c = 0.0;
};

struct OutputFormat {
  bool json = false;
  bool csv = false;
  int digits = kDefaultDigits;
};

struct SolverFlags {
  std::string scheme = "gauss-seidel";
  double tolerance = 1e-10;
  std::int64_t max_sweeps = 1'000'000;
  std::optional<std::int64_t> state_cap;
};

std::int64_t DefaultStateCap() {
  if (const char* env = std::getenv(kStateCapEnv)) {
    try {
      long long cap = std::stoll(env);
      if (cap > 0) return cap;
    } catch (const std::exception&) {
    }
    throw std::invalid_argument(std::string(kStateCapEnv) +
                                " must be a positive integer");
  }
  return kDefaultStateCap;
}

void AddGraphOptions(CLI::App* cmd, GraphSource& src) {
  cmd->add_option("--family", src.family,
                  "path | cycle | tree | grid | barbell | lollipop");
  cmd->add_option("--file", src.file, "edge-list file");
  cmd->add_option("--n", src.n, "path length / cycle length / grid side");
  cmd->add_option("--d", src.d, "tree branching factor");
  cmd->add_option("--depth", src.depth, "tree depth");
  cmd->add_option("--c", src.c, "clique fraction for barbell / lollipop");
}

void AddOutputOptions(CLI::App* cmd, OutputFormat& fmt) {
  auto* json = cmd->add_flag("--json", fmt.json, "JSON output");
  auto* csv = cmd->add_flag("--csv", fmt.csv, "CSV output");
  json->excludes(csv);
  cmd->add_option("--exact-digits", fmt.digits, "significant digits")
      ->check(CLI::Range(1, 17));
}

void AddSolverOptions(CLI::App* cmd, SolverFlags& flags) {
  cmd->add_option("--scheme", flags.scheme, "gauss-seidel | jacobi")
      ->check(CLI::IsMember({"gauss-seidel", "jacobi"}));
  cmd->add_option("--tolerance", flags.tolerance, "sup-norm sweep tolerance")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--max-sweeps", flags.max_sweeps, "sweep budget")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--state-cap", flags.state_cap,
                  "maximum (configuration, robber) states")
      ->check(CLI::PositiveNumber);
}

Graph LoadGraph(const GraphSource& src) {
  if (!src.file.empty() && !src.family.empty()) {
    throw std::invalid_argument("give either --family or --file, not both");
  }
  if (!src.file.empty()) return ReadEdgeListFile(src.file);
  if (src.family.empty()) {
    throw std::invalid_argument("a graph source (--family or --file) is required");
  }
  FamilySpec spec;
  spec.family = ParseFamily(src.family);
  spec.n = src.n;
  spec.d = src.d;
  spec.depth = src.depth;
  spec.c = src.c;
  return Generate(spec);
}

SolveOptions ToSolveOptions(const SolverFlags& flags) {
  SolveOptions opts;
  opts.scheme = flags.scheme == "jacobi" ? Scheme::kJacobi
                                         : Scheme::kGaussSeidel;
  opts.tolerance = flags.tolerance;
  opts.max_sweeps = flags.max_sweeps;
  opts.state_cap = flags.state_cap.value_or(DefaultStateCap());
  return opts;
}

// Table, continuation cache, policy and occupancy.
constexpr double kBytesPerState = 8 + 8 + 8 + 4 + 1;

void NoteStateCap(const SolverFlags& flags, const Graph& g, int k,
                  std::ostream& err) {
  if (!flags.state_cap) return;
  std::int64_t states = CountStates(g.num_vertices(), k);
  err << "state cap " << *flags.state_cap << "; k=" << k << " needs "
      << states << " states, about "
      << FormatNumber(states * kBytesPerState / (1024.0 * 1024.0), 3)
      << " MiB\n";
}

// ---------------------------------------------------------------------------
// Report rendering: text "key value" lines, one CSV row, or a JSON object.

using Value =
    std::variant<bool, std::int64_t, double, std::string, CopConfig,
                 std::vector<CopConfig>>;

class Report {
 public:
  Report& add(std::string key, Value value) {
    fields_.emplace_back(std::move(key), std::move(value));
    return *this;
  }

  void Print(std::ostream& out, const OutputFormat& fmt) const {
    if (fmt.json) {
      Json j = Json::object();
      for (const auto& [key, value] : fields_) j[key] = ToJson(value, fmt);
      out << j.dump() << '\n';
    } else if (fmt.csv) {
      for (std::size_t i = 0; i < fields_.size(); ++i) {
        out << (i ? "," : "") << fields_[i].first;
      }
      out << '\n';
      for (std::size_t i = 0; i < fields_.size(); ++i) {
        out << (i ? "," : "") << ToText(fields_[i].second, fmt, ' ', ';');
      }
      out << '\n';
    } else {
      for (const auto& [key, value] : fields_) {
        out << key << ' ' << ToText(value, fmt, ',', ' ') << '\n';
      }
    }
  }

 private:
  static std::string Join(const CopConfig& config, char sep) {
    std::string s;
    for (std::size_t i = 0; i < config.size(); ++i) {
      if (i) s += sep;
      s += std::to_string(config[i]);
    }
    return s;
  }

  static std::string ToText(const Value& value, const OutputFormat& fmt,
                            char inner, char outer) {
    return std::visit(
        [&](const auto& v) -> std::string {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, bool>) {
            return v ? "true" : "false";
          } else if constexpr (std::is_same_v<T, std::int64_t>) {
            return std::to_string(v);
          } else if constexpr (std::is_same_v<T, double>) {
            return FormatNumber(v, fmt.digits);
          } else if constexpr (std::is_same_v<T, std::string>) {
            return v;
          } else if constexpr (std::is_same_v<T, CopConfig>) {
            return Join(v, inner);
          } else {
            std::string s;
            for (std::size_t i = 0; i < v.size(); ++i) {
              if (i) s += outer;
              s += Join(v[i], inner);
            }
            return s;
          }
        },
        value);
  }

  static Json ToJson(const Value& value, const OutputFormat& fmt) {
    return std::visit(
        [&](const auto& v) -> Json {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, double>) {
            if (!std::isfinite(v)) return nullptr;
            return std::stod(FormatNumber(v, fmt.digits));
          } else {
            return v;
          }
        },
        value);
  }

  std::vector<std::pair<std::string, Value>> fields_;
};

void WriteFileWith(const std::string& path,
                   const std::function<void(std::ostream&)>& writer) {
  std::ofstream file(path);
  if (!file) throw std::invalid_argument("cannot write '" + path + "'");
  writer(file);
}

// ---------------------------------------------------------------------------
// Subcommands.

struct CtArgs {
  GraphSource source;
  OutputFormat format;
  SolverFlags solver;
  int k = 1;
  bool all_starts = false;
  std::string table_out;
  std::string policy_out;
};

int RunCt(const CtArgs& a, std::ostream& out, std::ostream& err) {
  Graph g = LoadGraph(a.source);
  NoteStateCap(a.solver, g, a.k, err);
  CaarResult result =
      CaarSolve(g, a.k, a.solver.state_cap.value_or(DefaultStateCap()));
  GameValue ct = CaptureTime(result);
  if (!a.table_out.empty()) {
    WriteFileWith(a.table_out, [&](std::ostream& f) {
      WriteValueTableCsv(f, result.cop_to_move, a.format.digits);
    });
  }
  if (!a.policy_out.empty()) {
    WriteFileWith(a.policy_out, [&](std::ostream& f) {
      WritePolicyCsv(f, result.cop_policy);
    });
  }
  Report report;
  report.add("ct", ct.value).add("k", std::int64_t{a.k});
  if (std::isfinite(ct.value)) {
    report.add("start", ct.optimal_starts.front());
    if (a.all_starts) report.add("starts", ct.optimal_starts);
  }
  report.add("iterations", result.iterations);
  report.Print(out, a.format);
  return std::isfinite(ct.value) ? kExitOk : kExitInfinite;
}

struct DctArgs {
  GraphSource source;
  OutputFormat format;
  SolverFlags solver;
  int k = 1;
  bool all_starts = false;
  std::string table_out;
  std::string policy_out;
};

int RunDct(const DctArgs& a, std::ostream& out, std::ostream& err) {
  Graph g = LoadGraph(a.source);
  NoteStateCap(a.solver, g, a.k, err);
  Report report;
  if (g.num_vertices() == 1) {
    report.add("dct", 0.0).add("k", std::int64_t{a.k});
    report.add("start", CopConfig(a.k, 0)).add("sweeps", std::int64_t{0});
    report.Print(out, a.format);
    return kExitOk;
  }
  CadrResult result = CadrSolve(g, a.k, ToSolveOptions(a.solver));
  GameValue dct = DrunkCaptureTime(result);
  if (!a.table_out.empty()) {
    WriteFileWith(a.table_out, [&](std::ostream& f) {
      WriteValueTableCsv(f, result.values, a.format.digits);
    });
  }
  if (!a.policy_out.empty()) {
    WriteFileWith(a.policy_out,
                  [&](std::ostream& f) { WritePolicyCsv(f, result.policy); });
  }
  report.add("dct", dct.value).add("k", std::int64_t{a.k});
  report.add("start", dct.optimal_starts.front());
  if (a.all_starts) report.add("starts", dct.optimal_starts);
  report.add("sweeps", result.sweeps).add("residual", result.residual);
  report.add("scheme", a.solver.scheme);
  report.Print(out, a.format);
  return kExitOk;
}

struct CodArgs {
  GraphSource source;
  OutputFormat format;
  SolverFlags solver;
  int max_cops = 3;
};

int RunCod(const CodArgs& a, std::ostream& out, std::ostream& err) {
  Graph g = LoadGraph(a.source);
  NoteStateCap(a.solver, g, 1, err);
  CostOptions opts;
  opts.solve = ToSolveOptions(a.solver);
  opts.max_cops = a.max_cops;
  CostOfDrunkenness cod = ComputeCostOfDrunkenness(g, opts);
  Report report;
  report.add("F", cod.ratio)
      .add("ct", cod.capture_time.value)
      .add("dct", cod.drunk_capture_time.value)
      .add("c", std::int64_t{cod.cop_number})
      .add("ct_start", cod.capture_time.optimal_starts.front())
      .add("dct_start", cod.drunk_capture_time.optimal_starts.front())
      .add("caar_iterations", cod.caar_iterations)
      .add("cadr_sweeps", cod.cadr_sweeps);
  report.Print(out, a.format);
  return kExitOk;
}

struct EvalArgs {
  GraphSource source;
  OutputFormat format;
  std::string strategy;
  std::string mode = "drunk";
  std::optional<std::int64_t> max_rounds;
  std::string distribution_out;
};

int RunEvalStrategy(const EvalArgs& a, std::ostream& out, std::ostream& err) {
  Graph g = LoadGraph(a.source);
  FixedStrategy s = ReadStrategyFile(a.strategy);
  ValidateStrategy(g, s);
  Report report;
  if (a.mode == "adversarial") {
    std::optional<std::int64_t> survival = AdversarialSurvivalTime(g, s);
    report.add("survival_time",
               survival ? static_cast<double>(*survival) : kInfinite);
    report.Print(out, a.format);
    return survival ? kExitOk : kExitInfinite;
  }
  std::int64_t max_rounds = a.max_rounds.value_or(
      std::max<std::int64_t>(DefaultMaxRounds(g), std::ssize(s.rounds)));
  CaptureDistribution dist = FixedStrategyCaptureDistribution(g, s, max_rounds);
  if (!a.distribution_out.empty()) {
    WriteFileWith(a.distribution_out, [&](std::ostream& f) {
      WriteCaptureDistributionCsv(f, dist, a.format.digits);
    });
  }
  double expected = 0.0;
  for (std::size_t t = 1; t < dist.per_round.size(); ++t) {
    expected += static_cast<double>(t) * dist.per_round[t];
  }
  report.add("expected_time", expected)
      .add("residual", dist.residual)
      .add("rounds", dist.rounds())
      .add("terminated", dist.terminated);
  report.Print(out, a.format);
  if (!dist.terminated) {
    err << "nonterminating strategy: residual "
        << FormatNumber(dist.residual, a.format.digits) << " after "
        << dist.rounds() << " rounds; expected_time is a partial sum\n";
    return kExitNonConvergence;
  }
  return kExitOk;
}

struct SweepArgs {
  std::string family;
  std::vector<int> n_values;
  std::vector<double> c_values{0.0};
  std::vector<int> depth_values;
  int d = 2;
  int k = 0;
  int max_cops = 3;
  int jobs = 1;
  std::string out_path;
  SolverFlags solver;
  int digits = kDefaultDigits;
};

struct SweepRow {
  FamilySpec spec;
  int vertices = 0;
  int k = 0;
  double ct = 0, dct = 0, ratio = 0;
  std::int64_t caar_iterations = 0, cadr_sweeps = 0;
  double wall_ms = 0;
  std::string error;
};

SweepRow RunSweepRow(const FamilySpec& spec, const SweepArgs& a) {
  SweepRow row;
  row.spec = spec;
  auto start = std::chrono::steady_clock::now();
  try {
    Graph g = Generate(spec);
    row.vertices = g.num_vertices();
    SolveOptions opts = ToSolveOptions(a.solver);
    if (a.k == 0) {
      CostOptions cost;
      cost.solve = opts;
      cost.max_cops = a.max_cops;
      CostOfDrunkenness cod = ComputeCostOfDrunkenness(g, cost);
      row.k = cod.cop_number;
      row.ct = cod.capture_time.value;
      row.dct = cod.drunk_capture_time.value;
      row.ratio = cod.ratio;
      row.caar_iterations = cod.caar_iterations;
      row.cadr_sweeps = cod.cadr_sweeps;
    } else {
      row.k = a.k;
      CheckStateBudget(g.num_vertices(), a.k, opts.state_cap);
      CaarResult caar = CaarSolve(g, a.k, opts.state_cap);
      row.ct = CaptureTime(caar).value;
      row.caar_iterations = caar.iterations;
      CadrResult cadr = CadrSolve(g, a.k, opts);
      row.dct = DrunkCaptureTime(cadr).value;
      row.cadr_sweeps = cadr.sweeps;
      row.ratio = row.ct / row.dct;
    }
  } catch (const std::exception& e) {
    row.error = e.what();
  }
  row.wall_ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  return row;
}

std::string CsvEscape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return out + "\"";
}

int RunSweep(const SweepArgs& a, std::ostream& out) {
  Family family = ParseFamily(a.family);
  std::vector<FamilySpec> specs;
  if (family == Family::kCompleteTree) {
    if (a.depth_values.empty()) {
      throw std::invalid_argument("tree sweep needs --depth values");
    }
    for (int depth : a.depth_values) {
      specs.push_back(FamilySpec{family, 0, a.d, depth, 0.0});
    }
  } else {
    if (a.n_values.empty()) throw std::invalid_argument("sweep needs --n values");
    if (a.c_values.empty()) throw std::invalid_argument("sweep needs --c values");
    for (int n : a.n_values) {
      for (double c : a.c_values) specs.push_back(FamilySpec{family, n, a.d, 0, c});
    }
  }

  // Rows may run concurrently; they are written in input order.
  std::vector<SweepRow> rows(specs.size());
  const std::size_t jobs = static_cast<std::size_t>(std::max(1, a.jobs));
  for (std::size_t begin = 0; begin < specs.size(); begin += jobs) {
    std::vector<std::future<SweepRow>> batch;
    for (std::size_t i = begin; i < std::min(specs.size(), begin + jobs); ++i) {
      batch.push_back(std::async(jobs > 1 ? std::launch::async
                                          : std::launch::deferred,
                                 RunSweepRow, specs[i], std::cref(a)));
    }
    for (std::size_t i = 0; i < batch.size(); ++i) rows[begin + i] = batch[i].get();
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!a.out_path.empty()) {
    file.open(a.out_path);
    if (!file) throw std::invalid_argument("cannot write '" + a.out_path + "'");
    sink = &file;
  }
  auto num = [&](double v) { return FormatNumber(v, a.digits); };
  *sink << "family,n,c,d,depth,vertices,k,ct,dct,F,caar_iterations,"
           "cadr_sweeps,wall_ms,error\n";
  for (const SweepRow& row : rows) {
    *sink << FamilyName(row.spec.family) << ',' << row.spec.n << ','
          << num(row.spec.c) << ',' << row.spec.d << ',' << row.spec.depth
          << ',' << row.vertices << ',' << row.k << ',';
    if (row.error.empty()) {
      *sink << num(row.ct) << ',' << num(row.dct) << ',' << num(row.ratio)
            << ',' << row.caar_iterations << ',' << row.cadr_sweeps;
    } else {
      *sink << ",,,,";
    }
    *sink << ',' << FormatNumber(row.wall_ms, 4) << ','
          << CsvEscape(row.error) << '\n';
  }
  return kExitOk;
}

struct SimulateArgs {
  GraphSource source;
  OutputFormat format;
  SolverFlags solver;
  std::string mode = "policy";
  int k = 1;
  std::int64_t trials = 10000;
  std::uint64_t seed = 1;
  std::optional<std::int64_t> max_rounds;
  std::string strategy;
  std::string evader = "max-distance-greedy";
  std::vector<Vertex> start;
  int walk_n = 1000;
  double walk_c = 3.0;
};

void PrintSimReport(const SimReport& r, const OutputFormat& fmt,
                    std::ostream& out, std::optional<double> exact) {
  if (fmt.json) {
    out << SimReportJson(r) << '\n';
    return;
  }
  Report report;
  report.add("trials", r.trials)
      .add("mean", r.mean)
      .add("stderr", r.standard_error)
      .add("max", r.max)
      .add("censored", r.censored)
      .add("aborted", r.aborted);
  if (exact) report.add("exact", *exact);
  report.add("seed", std::to_string(r.seed)).add("rng", r.rng);
  report.Print(out, fmt);
}

int RunSimulate(const SimulateArgs& a, std::ostream& out, std::ostream& err) {
  if (a.mode == "walk") {
    WalkDeviation w = WalkDeviationCheck(a.walk_n, a.walk_c, a.trials, a.seed);
    if (a.format.json) {
      out << WalkDeviationJson(w, a.seed) << '\n';
    } else {
      Report report;
      report.add("trials", w.trials)
          .add("exceeded", w.exceeded)
          .add("exceedance", w.exceedance)
          .add("threshold", w.threshold)
          .add("bound", w.bound);
      report.Print(out, a.format);
    }
    return kExitOk;
  }
  Graph g = LoadGraph(a.source);
  if (a.mode == "policy") {
    NoteStateCap(a.solver, g, a.k, err);
    CadrResult cadr = CadrSolve(g, a.k, ToSolveOptions(a.solver));
    GameValue dct = DrunkCaptureTime(cadr);
    int start = cadr.values.space().index_of(dct.optimal_starts.front());
    SimReport r = SimulateDrunkPursuit(
        cadr.policy, start, a.trials, a.seed,
        a.max_rounds.value_or(DefaultCensorRounds(g)));
    PrintSimReport(r, a.format, out, dct.value);
    return kExitOk;
  }
  if (a.mode == "strategy") {
    FixedStrategy s = ReadStrategyFile(a.strategy);
    SimReport r = SimulateDrunkPursuit(
        g, s, a.trials, a.seed, a.max_rounds.value_or(DefaultCensorRounds(g)));
    PrintSimReport(r, a.format, out, std::nullopt);
    return kExitOk;
  }
  SimReport r = SimulateRandomCops(g, a.k, ParseEvader(a.evader), a.trials,
                                   a.seed,
                                   a.max_rounds.value_or(DefaultCensorRounds(g)),
                                   a.start);
  PrintSimReport(r, a.format, out, std::nullopt);
  return kExitOk;
}

struct GraphArgs {
  GraphSource source;
  OutputFormat format;
  bool validate = false;
};

int RunGraph(const GraphArgs& a, std::ostream& out) {
  Graph g = LoadGraph(a.source);
  if (!a.validate) {
    WriteEdgeList(out, g);
    return kExitOk;
  }
  Diagnostics diag = Validate(g);
  Report report;
  report.add("vertices", std::int64_t{g.num_vertices()})
      .add("edges", g.num_edges())
      .add("connected", diag.connected)
      .add("diameter", std::int64_t{diag.diameter})
      .add("max_degree", std::int64_t{diag.max_degree});
  report.Print(out, a.format);
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Capture times of adversarial and drunk robbers on graphs"};
  app.require_subcommand(1);

  CtArgs ct;
  auto* ct_cmd = app.add_subcommand("ct", "adversarial capture time");
  AddGraphOptions(ct_cmd, ct.source);
  AddOutputOptions(ct_cmd, ct.format);
  ct_cmd->add_option("--k", ct.k, "number of cops")->check(CLI::PositiveNumber);
  ct_cmd->add_option("--state-cap", ct.solver.state_cap, "state budget")
      ->check(CLI::PositiveNumber);
  ct_cmd->add_flag("--all-starts", ct.all_starts, "list every optimal start");
  ct_cmd->add_option("--table-out", ct.table_out, "write C as CSV");
  ct_cmd->add_option("--policy-out", ct.policy_out, "write the cop policy");

  DctArgs dct;
  auto* dct_cmd = app.add_subcommand("dct", "expected drunk capture time");
  AddGraphOptions(dct_cmd, dct.source);
  AddOutputOptions(dct_cmd, dct.format);
  AddSolverOptions(dct_cmd, dct.solver);
  dct_cmd->add_option("--k", dct.k, "number of cops")->check(CLI::PositiveNumber);
  dct_cmd->add_flag("--all-starts", dct.all_starts, "list every optimal start");
  dct_cmd->add_option("--table-out", dct.table_out, "write C as CSV");
  dct_cmd->add_option("--policy-out", dct.policy_out, "write the cop policy");

  CodArgs cod;
  auto* cod_cmd = app.add_subcommand("cod", "cost of drunkenness ct/dct");
  AddGraphOptions(cod_cmd, cod.source);
  AddOutputOptions(cod_cmd, cod.format);
  AddSolverOptions(cod_cmd, cod.solver);
  cod_cmd->add_option("--max-cops", cod.max_cops, "cop number search cap")
      ->check(CLI::PositiveNumber);

  EvalArgs eval;
  auto* eval_cmd =
      app.add_subcommand("eval-strategy", "evaluate a fixed cop strategy");
  AddGraphOptions(eval_cmd, eval.source);
  AddOutputOptions(eval_cmd, eval.format);
  eval_cmd->add_option("--strategy", eval.strategy, "strategy file")
      ->required();
  eval_cmd->add_option("--mode", eval.mode, "drunk | adversarial")
      ->check(CLI::IsMember({"drunk", "adversarial"}));
  eval_cmd->add_option("--max-rounds", eval.max_rounds, "round budget")
      ->check(CLI::NonNegativeNumber);
  eval_cmd->add_option("--distribution-out", eval.distribution_out,
                       "write t,q_t,cumulative CSV");

  SweepArgs sweep;
  auto* sweep_cmd =
      app.add_subcommand("sweep", "ct, dct and F over a parameter range");
  sweep_cmd->add_option("--family", sweep.family, "graph family")->required();
  sweep_cmd->add_option("--n", sweep.n_values, "comma-separated n values")
      ->delimiter(',');
  sweep_cmd->add_option("--c", sweep.c_values, "comma-separated c values")
      ->delimiter(',');
  sweep_cmd->add_option("--depth", sweep.depth_values, "tree depths")
      ->delimiter(',');
  sweep_cmd->add_option("--d", sweep.d, "tree branching factor");
  sweep_cmd->add_option("--k", sweep.k, "cops; 0 searches for c(G)")
      ->check(CLI::NonNegativeNumber);
  sweep_cmd->add_option("--max-cops", sweep.max_cops, "cop number search cap")
      ->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--jobs", sweep.jobs, "rows solved concurrently")
      ->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--out", sweep.out_path, "CSV output file");
  sweep_cmd->add_option("--exact-digits", sweep.digits, "significant digits")
      ->check(CLI::Range(1, 17));
  AddSolverOptions(sweep_cmd, sweep.solver);

  SimulateArgs sim;
  auto* sim_cmd = app.add_subcommand("simulate", "Monte Carlo simulation");
  AddGraphOptions(sim_cmd, sim.source);
  AddOutputOptions(sim_cmd, sim.format);
  AddSolverOptions(sim_cmd, sim.solver);
  sim_cmd->add_option("--mode", sim.mode, "policy | strategy | random-cops | walk")
      ->check(CLI::IsMember({"policy", "strategy", "random-cops", "walk"}));
  sim_cmd->add_option("--k", sim.k, "number of cops")->check(CLI::PositiveNumber);
  sim_cmd->add_option("--trials", sim.trials, "trials")->check(CLI::PositiveNumber);
  sim_cmd->add_option("--seed", sim.seed, "master seed");
  sim_cmd->add_option("--max-rounds", sim.max_rounds, "censoring threshold")
      ->check(CLI::PositiveNumber);
  sim_cmd->add_option("--strategy", sim.strategy, "strategy file");
  sim_cmd->add_option("--evader", sim.evader,
                      "max-distance-greedy | uniform-random");
  sim_cmd->add_option("--start", sim.start, "initial cop vertices")
      ->delimiter(',');
  sim_cmd->add_option("--walk-n", sim.walk_n, "walk length")
      ->check(CLI::PositiveNumber);
  sim_cmd->add_option("--walk-c", sim.walk_c, "deviation constant (> 2)");

  GraphArgs graph;
  auto* graph_cmd = app.add_subcommand("graph", "print or validate a graph");
  AddGraphOptions(graph_cmd, graph.source);
  AddOutputOptions(graph_cmd, graph.format);
  graph_cmd->add_flag("--validate", graph.validate,
                      "report connectivity, diameter and maximum degree");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*ct_cmd) return RunCt(ct, out, err);
    if (*dct_cmd) return RunDct(dct, out, err);
    if (*cod_cmd) return RunCod(cod, out, err);
    if (*eval_cmd) return RunEvalStrategy(eval, out, err);
    if (*sweep_cmd) return RunSweep(sweep, out);
    if (*sim_cmd) return RunSimulate(sim, out, err);
    if (*graph_cmd) return RunGraph(graph, out);
  } catch (const InfeasibleSizeError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const NonConvergenceError& e) {
    err << "error: " << e.what() << '\n';
    return kExitNonConvergence;
  } catch (const NonterminatingStrategyError& e) {
    err << "error: " << e.what() << '\n';
    return kExitNonConvergence;
  } catch (const CopNumberNotFound& e) {
    err << "error: " << e.what() << '\n';
    return kExitInfinite;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace copsrobbers
