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


#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "copsrobbers/cli.h"
#include "doctest.h"
#include "json.hpp"

namespace cr = copsrobbers;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run Cli(std::vector<std::string> args) {
  args.insert(args.begin(), "copsrobbers");
  std::ostringstream out, err;
  int code = cr::RunCli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string TempPath(const std::string& name) {
  const char* dir = std::getenv("COPSROBBERS_TEST_DATA");
  return (std::filesystem::path(dir ? dir : ".") / name).string();
}

}  // namespace

TEST_CASE("ct text output and exit codes") {
  Run r = Cli({"ct", "--family", "path", "--n", "9", "--k", "1"});
  CHECK(r.code == cr::kExitOk);
  CHECK(r.out.find("ct 4\n") != std::string::npos);
  CHECK(r.out.find("start 4\n") != std::string::npos);

  Run inf = Cli({"ct", "--family", "cycle", "--n", "4"});
  CHECK(inf.code == cr::kExitInfinite);
  CHECK(inf.out.find("ct inf") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(Cli({"ct", "--family", "path", "--n", "5", "--bogus"}).code == cr::kExitUsage);
  CHECK(Cli({"ct", "--family", "star", "--n", "5"}).code == cr::kExitUsage);
  CHECK(Cli({"ct"}).code == cr::kExitUsage);
  CHECK(Cli({}).code == cr::kExitUsage);
  CHECK(Cli({"dct", "--family", "path", "--n", "5", "--scheme", "sor"}).code == cr::kExitUsage);
  CHECK(Cli({"--help"}).code == cr::kExitOk);
}

TEST_CASE("infeasible and nonconvergent runs") {
  Run big = Cli({"dct", "--family", "cycle", "--n", "60", "--k", "3", "--state-cap", "1000"});
  CHECK(big.code == cr::kExitInfeasible);
  CHECK(big.err.find("MiB") != std::string::npos);
  Run slow = Cli({"dct", "--family", "path", "--n", "30", "--max-sweeps", "3"});
  CHECK(slow.code == cr::kExitNonConvergence);
  Run cod = Cli({"cod", "--family", "cycle", "--n", "5", "--max-cops", "1"});
  CHECK(cod.code == cr::kExitInfinite);
}

TEST_CASE("dct json honours the digit setting") {
  Run r = Cli({"dct", "--family", "path", "--n", "3", "--json", "--exact-digits", "3"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["dct"] == 0.667);
  CHECK(j["start"] == std::vector<int>{0});
  Run full = Cli({"dct", "--family", "path", "--n", "3", "--json", "--exact-digits", "17"});
  CHECK(nlohmann::json::parse(full.out)["dct"].get<double>() == doctest::Approx(2.0 / 3).epsilon(1e-15));
}

TEST_CASE("cod csv") {
  Run r = Cli({"cod", "--family", "path", "--n", "3", "--csv"});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("F,ct,dct,c,", 0) == 0);
  CHECK(r.out.find("\n1.5,1,0.666667,1,") != std::string::npos);
}

TEST_CASE("eval-strategy from files") {
  std::string graph = TempPath("p5.txt");
  std::string strategy = TempPath("sweep5.txt");
  std::string dist = TempPath("dist5.csv");
  std::ofstream(graph) << "5 4\n0 1\n1 2\n2 3\n3 4\n";
  std::ofstream(strategy) << "0\n1\n2\n3\n4\n";
  Run r = Cli({"eval-strategy", "--file", graph, "--strategy", strategy,
               "--distribution-out", dist});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("expected_time 1.55\n") != std::string::npos);
  std::ifstream in(dist);
  std::string header;
  std::getline(in, header);
  CHECK(header == "t,q_t,cumulative");

  Run adv = Cli({"eval-strategy", "--file", graph, "--strategy", strategy,
                 "--mode", "adversarial"});
  CHECK(adv.code == 0);
  CHECK(adv.out == "survival_time 4\n");

  std::string hold = TempPath("hold.txt");
  std::ofstream(hold) << "0\n";
  Run never = Cli({"eval-strategy", "--family", "cycle", "--n", "6", "--strategy",
                   hold, "--max-rounds", "10"});
  CHECK(never.code == cr::kExitNonConvergence);
  Run inf = Cli({"eval-strategy", "--family", "cycle", "--n", "6", "--strategy",
                 hold, "--mode", "adversarial"});
  CHECK(inf.code == cr::kExitInfinite);

  std::string illegal = TempPath("jump.txt");
  std::ofstream(illegal) << "0\n3\n";
  CHECK(Cli({"eval-strategy", "--file", graph, "--strategy", illegal}).code == cr::kExitUsage);
}

TEST_CASE("sweep keeps input order and reports row errors") {
  Run r = Cli({"sweep", "--family", "lollipop", "--n", "6,4", "--c", "0.5,0.05", "--jobs", "2"});
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "family,n,c,d,depth,vertices,k,ct,dct,F,caar_iterations,cadr_sweeps,wall_ms,error");
  std::vector<std::string> rows;
  while (std::getline(in, line)) rows.push_back(line);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].rfind("lollipop,6,0.5,", 0) == 0);
  CHECK(rows[1].rfind("lollipop,6,0.05,", 0) == 0);
  CHECK(rows[1].find("floor") != std::string::npos);
  CHECK(rows[2].rfind("lollipop,4,0.5,", 0) == 0);

  Run fixed = Cli({"sweep", "--family", "cycle", "--n", "5", "--k", "1"});
  CHECK(fixed.out.find("cycle,5,0,2,0,5,1,inf,") != std::string::npos);
  Run tree = Cli({"sweep", "--family", "tree", "--depth", "1,2"});
  CHECK(tree.out.find("tree,0,0,2,2,7,1,") != std::string::npos);
}

TEST_CASE("documented command examples") {
  std::string k2 = TempPath("k2.edges");
  std::ofstream(k2) << "2 1\n0 1\n";
  CHECK(Cli({"ct", "--file", k2, "--k", "1"}).out.rfind("ct 1\n", 0) == 0);
  CHECK(Cli({"dct", "--family", "path", "--n", "3"}).out.rfind("dct 0.666667\n", 0) == 0);

  auto value = [](const Run& r, const std::string& key) {
    return nlohmann::json::parse(r.out)[key].get<double>();
  };
  double p200 = value(Cli({"dct", "--family", "path", "--n", "200", "--json"}), "dct");
  CHECK(p200 / 200 >= 0.23);
  CHECK(p200 / 200 <= 0.25);
  CHECK(value(Cli({"dct", "--family", "tree", "--d", "2", "--depth", "6", "--json"}), "dct") <= 6);
  double fp = value(Cli({"cod", "--family", "path", "--n", "200", "--json"}), "F");
  CHECK(fp >= 2.0);
  CHECK(fp <= 2.2);
  double fb = value(Cli({"cod", "--family", "barbell", "--n", "100", "--c", "1.0", "--json"}), "F");
  CHECK(fb >= 1.1);
  CHECK(fb <= 1.3);

  std::string cover = TempPath("cover.txt");
  std::ofstream(cover) << "0 1 2\n";
  Run all = Cli({"eval-strategy", "--family", "path", "--n", "3", "--strategy", cover});
  CHECK(all.out.rfind("expected_time 0\n", 0) == 0);
}

namespace {

std::vector<double> SweepColumn(const std::string& csv, int column) {
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  std::vector<double> out;
  while (std::getline(in, line)) {
    std::istringstream cells(line);
    std::string cell;
    for (int i = 0; i <= column; ++i) std::getline(cells, cell, ',');
    out.push_back(std::stod(cell));
  }
  return out;
}

}  // namespace

TEST_CASE("sweep curves") {
  constexpr int kF = 9;
  auto barbell = SweepColumn(
      Cli({"sweep", "--family", "barbell", "--n", "100", "--c", "0,0.5,1"}).out, kF);
  REQUIRE(barbell.size() == 3);
  CHECK(barbell[0] > barbell[1]);
  CHECK(barbell[1] > barbell[2]);
  CHECK(barbell[2] > 1.0);
  auto path = SweepColumn(Cli({"sweep", "--family", "path", "--n", "50,100,200"}).out, kF);
  REQUIRE(path.size() == 3);
  CHECK(path[0] > path[1]);
  CHECK(path[1] > path[2]);
  CHECK(path[2] > 2.0);
}

TEST_CASE("simulate modes") {
  Run policy = Cli({"simulate", "--family", "grid", "--n", "3", "--mode", "policy",
                    "--trials", "2000", "--json"});
  REQUIRE(policy.code == 0);
  auto j = nlohmann::json::parse(policy.out);
  CHECK(j["trials"] == 2000);
  CHECK(j["rng"] == "mt19937_64/splitmix64-per-trial");
  Run again = Cli({"simulate", "--family", "grid", "--n", "3", "--mode", "policy",
                   "--trials", "2000", "--json"});
  CHECK(again.out == policy.out);

  Run walk = Cli({"simulate", "--mode", "walk", "--walk-n", "100", "--trials", "100", "--json"});
  CHECK(walk.code == 0);
  CHECK(nlohmann::json::parse(walk.out).contains("exceedance"));

  Run cops = Cli({"simulate", "--family", "cycle", "--n", "8", "--mode", "random-cops",
                  "--k", "2", "--trials", "500", "--start", "0,4"});
  CHECK(cops.code == 0);
  CHECK(cops.out.find("trials 500") != std::string::npos);
}

TEST_CASE("graph subcommand") {
  Run r = Cli({"graph", "--family", "cycle", "--n", "3"});
  CHECK(r.out == "3 3\n0 1\n0 2\n1 2\n");
  Run v = Cli({"graph", "--family", "grid", "--n", "3", "--validate", "--json"});
  auto j = nlohmann::json::parse(v.out);
  CHECK(j["diameter"] == 4);
  CHECK(j["connected"] == true);
}
