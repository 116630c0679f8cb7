// Copyright 2026 The ltfair Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ltfair/cli.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "ltfair/io.h"
#include "test_util.h"

namespace ltfair {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;
using testing::DataPath;

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult Invoke(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::Run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() /
           (std::string("ltfair_cli_") + info->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Temp(const std::string& name) const {
    return (dir_ / name).string();
  }

  fs::path dir_;
};

TEST_F(CliTest, SolveRandJson) {
  const RunResult r = Invoke({"solve-rand", "--instance", DataPath("rand2.json"),
                           "--format", "json"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  const json doc = json::parse(r.out);
  EXPECT_NEAR(doc["value"].get<double>(), 1.0, 1e-4);
  EXPECT_NEAR(doc["expected_group_counts"][0].get<double>(), 0.5, 1e-6);
  EXPECT_NEAR(doc["expected_group_counts"][1].get<double>(), 0.5, 1e-6);
  EXPECT_EQ(doc["mode"], "exact");
  EXPECT_EQ(doc["certificate"]["type"], "exact-lp");
  EXPECT_EQ(doc["distribution"].size(), 2u);
}

TEST_F(CliTest, JsonOutputIsByteIdenticalAcrossRuns) {
  for (const char* cmd : {"solve-rand", "solve-det", "solve-greedy", "oracle"}) {
    const RunResult a = Invoke({cmd, "--instance", DataPath("toy3.json"),
                             "--format", "json", "--seed", "3"});
    const RunResult b = Invoke({cmd, "--instance", DataPath("toy3.json"),
                             "--format", "json", "--seed", "3"});
    ASSERT_EQ(a.code, cli::kExitOk) << cmd << a.err;
    EXPECT_EQ(a.out, b.out) << cmd;
  }
}

TEST_F(CliTest, SolveDetAndGreedy) {
  const RunResult det = Invoke({"solve-det", "--instance", DataPath("toy3.json"),
                             "--format", "json"});
  ASSERT_EQ(det.code, cli::kExitOk) << det.err;
  const json d = json::parse(det.out);
  EXPECT_EQ(d["set"], json::array({0, 2}));
  EXPECT_DOUBLE_EQ(d["value"].get<double>(), 3.0);
  EXPECT_EQ(d["group_counts"], json::array({1, 1}));

  const RunResult greedy = Invoke({"solve-greedy", "--instance",
                                DataPath("toy3.json"), "--format", "json"});
  ASSERT_EQ(greedy.code, cli::kExitOk) << greedy.err;
  const json g = json::parse(greedy.out);
  EXPECT_EQ(g["set"], json::array({0, 2}));
  EXPECT_DOUBLE_EQ(g["value"].get<double>(), 3.0);
}

TEST_F(CliTest, TableFormatIsDefault) {
  const RunResult r = Invoke({"oracle", "--instance", DataPath("toy3.json")});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_NE(r.out.find("OPT_LP"), std::string::npos);
  EXPECT_NE(r.out.find("3.0"), std::string::npos);
  EXPECT_THROW(json::parse(r.out), json::parse_error);
}

TEST_F(CliTest, OracleJson) {
  const RunResult r =
      Invoke({"oracle", "--instance", DataPath("rand2.json"), "--format", "json"});
  ASSERT_EQ(r.code, cli::kExitOk);
  const json doc = json::parse(r.out);
  EXPECT_NEAR(doc["optimum"].get<double>(), 1.0, 1e-12);
}

TEST_F(CliTest, CheckReportsInfeasibleResultWithExitZero) {
  const RunResult r =
      Invoke({"check", "--instance", DataPath("rand2.json"), "--result",
           DataPath("results/bad_result.json"), "--format", "json"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  const json doc = json::parse(r.out);
  EXPECT_FALSE(doc["feasible"].get<bool>());
}

TEST_F(CliTest, SolveRandOutputPassesCheck) {
  const std::string result = Temp("result.json");
  const RunResult solve =
      Invoke({"solve-rand", "--instance", DataPath("toy3.json"), "--format",
           "json", "--out", result});
  ASSERT_EQ(solve.code, cli::kExitOk) << solve.err;
  EXPECT_TRUE(solve.out.empty());
  ASSERT_TRUE(fs::exists(result));
  const RunResult check = Invoke({"check", "--instance", DataPath("toy3.json"),
                               "--result", result, "--format", "json"});
  ASSERT_EQ(check.code, cli::kExitOk) << check.err;
  const json doc = json::parse(check.out);
  EXPECT_TRUE(doc["feasible"].get<bool>());
  EXPECT_NEAR(doc["value"].get<double>(), 3.0, 1e-4);
}

TEST_F(CliTest, DeterministicResultPassesCheck) {
  const std::string result = Temp("det.json");
  ASSERT_EQ(Invoke({"solve-det", "--instance", DataPath("toy3.json"), "--format",
                 "json", "--out", result})
                .code,
            cli::kExitOk);
  const RunResult check = Invoke({"check", "--instance", DataPath("toy3.json"),
                               "--result", result, "--format", "json"});
  ASSERT_EQ(check.code, cli::kExitOk) << check.err;
  EXPECT_TRUE(json::parse(check.out)["feasible"].get<bool>());
}

TEST_F(CliTest, InfeasibleInstanceExitsOne) {
  for (const char* cmd : {"solve-det", "solve-greedy"}) {
    const RunResult r = Invoke({cmd, "--instance", DataPath("infeasible.json")});
    EXPECT_EQ(r.code, cli::kExitInfeasible) << cmd;
    EXPECT_NE(r.err.find("P.2 infeasible"), std::string::npos) << r.err;
  }
  EXPECT_EQ(Invoke({"solve-rand", "--instance", DataPath("infeasible.json")}).code,
            cli::kExitInfeasible);
  EXPECT_EQ(Invoke({"oracle", "--instance", DataPath("infeasible.json")}).code,
            cli::kExitInfeasible);
}

TEST_F(CliTest, InputErrorsExitTwo) {
  EXPECT_EQ(Invoke({"solve-rand", "--instance", Temp("missing.json")}).code,
            cli::kExitInputError);
  EXPECT_EQ(Invoke({"solve-rand"}).code, cli::kExitInputError);
  EXPECT_EQ(Invoke({"frobnicate"}).code, cli::kExitInputError);
  EXPECT_EQ(Invoke({}).code, cli::kExitInputError);
  EXPECT_EQ(Invoke({"solve-rand", "--instance", DataPath("rand2.json"),
                 "--format", "xml"})
                .code,
            cli::kExitInputError);
  EXPECT_EQ(Invoke({"solve-rand", "--instance", DataPath("rand2.json"),
                 "--oracle-mode", "magic"})
                .code,
            cli::kExitInputError);
  EXPECT_EQ(Invoke({"solve-det", "--instance", DataPath("rand2.json"),
                 "--samples", "0"})
                .code,
            cli::kExitInputError);
  EXPECT_EQ(Invoke({"check", "--instance", DataPath("rand2.json")}).code,
            cli::kExitInputError);

  const std::string broken = Temp("broken.json");
  WriteFile(broken, "{\"items\": 2,\n \"budget\": }");
  const RunResult r = Invoke({"oracle", "--instance", broken});
  EXPECT_EQ(r.code, cli::kExitInputError);
  EXPECT_NE(r.err.find("broken.json:2:"), std::string::npos) << r.err;

  const std::string no_objective = Temp("no_objective.json");
  WriteFile(no_objective,
            R"({"items": 2, "budget": 1, "groups": [{"name": "A", )"
            R"("members": [0, 1], "alpha": 0, "beta": 1}]})");
  EXPECT_EQ(Invoke({"oracle", "--instance", no_objective}).code,
            cli::kExitInputError);
}

TEST_F(CliTest, EnumerationBudgetIsAnInputError) {
  const std::string path = Temp("big.json");
  json doc = {{"items", 30},
              {"budget", 15},
              {"groups", json::array({{{"name", "A"},
                                       {"members", json::array()},
                                       {"alpha", 0},
                                       {"beta", 10}}})},
              {"objective",
               {{"type", "modular"}, {"weights", std::vector<double>(30, 1)}}}};
  WriteFile(path, doc.dump());
  EXPECT_EQ(Invoke({"oracle", "--instance", path, "--enum-budget", "1000"}).code,
            cli::kExitInputError);
}

TEST_F(CliTest, HelpExitsZero) {
  EXPECT_EQ(Invoke({"--help"}).code, cli::kExitOk);
  EXPECT_EQ(Invoke({"solve-rand", "--help"}).code, cli::kExitOk);
}

TEST_F(CliTest, TraceFileHasOneJsonObjectPerLine) {
  const std::string det_trace = Temp("det.jsonl");
  ASSERT_EQ(Invoke({"solve-det", "--instance", DataPath("toy3.json"), "--trace",
                 det_trace})
                .code,
            cli::kExitOk);
  const std::string rand_trace = Temp("rand.jsonl");
  ASSERT_EQ(Invoke({"solve-rand", "--instance", DataPath("rand2.json"),
                 "--trace", rand_trace})
                .code,
            cli::kExitOk);
  std::set<std::string> events;
  for (const std::string& path : {det_trace, rand_trace}) {
    std::ifstream in(path);
    std::string line;
    int lines = 0;
    while (std::getline(in, line)) {
      const json event = json::parse(line);
      events.insert(event["event"].get<std::string>());
      ++lines;
    }
    EXPECT_GT(lines, 0) << path;
  }
  EXPECT_TRUE(events.count("cg_iteration"));
  EXPECT_TRUE(events.count("ellipsoid_probe"));
}

TEST_F(CliTest, HeuristicOracleMode) {
  const RunResult r = Invoke({"solve-rand", "--instance", DataPath("toy3.json"),
                           "--format", "json", "--oracle-mode", "heuristic"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  const json doc = json::parse(r.out);
  EXPECT_EQ(doc["mode"], "heuristic");
  EXPECT_EQ(doc["certificate"]["type"], "one-minus-inv-e");
}

TEST_F(CliTest, BenchOrdersRowsAndMeetsRatioFloors) {
  fs::copy_file(DataPath("toy3.json"), dir_ / "b_toy3.json");
  fs::copy_file(DataPath("rand2.json"), dir_ / "a_rand2.json");
  WriteFile(Temp("notes.txt"), "ignored");
  const RunResult r =
      Invoke({"bench", "--instance", dir_.string(), "--format", "json"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  const json rows = json::parse(r.out)["rows"];
  ASSERT_EQ(rows.size(), 8u);
  const std::vector<std::string> solvers = {"oracle", "solve-det",
                                            "solve-greedy", "solve-rand"};
  const double e = 1.0 - std::exp(-1.0);
  for (size_t k = 0; k < rows.size(); ++k) {
    const json& row = rows[k];
    EXPECT_EQ(row["instance"], k < 4 ? "a_rand2.json" : "b_toy3.json");
    EXPECT_EQ(row["solver"], solvers[k % 4]);
    EXPECT_EQ(row["status"], "ok");
    const double ratio = row["ratio"].get<double>();
    if (row["solver"] == "solve-det") EXPECT_GE(ratio, e * e - 1e-6);
    if (row["solver"] == "solve-greedy") EXPECT_GE(ratio, e * e / 2 - 1e-6);
    if (row["solver"] == "solve-rand") {
      EXPECT_NEAR(ratio, 1.0, 2e-4);
      EXPECT_EQ(row["feasibility"], "strict");
    }
  }
  const RunResult again =
      Invoke({"bench", "--instance", dir_.string(), "--format", "json"});
  EXPECT_EQ(r.out, again.out);

  const RunResult table = Invoke({"bench", "--instance", dir_.string()});
  ASSERT_EQ(table.code, cli::kExitOk);
  EXPECT_NE(table.out.find("feasibility"), std::string::npos);
  EXPECT_NE(table.out.find("time(s)"), std::string::npos);
}

TEST_F(CliTest, BenchRecordsPerInstanceFailures) {
  fs::copy_file(DataPath("infeasible.json"), dir_ / "infeasible.json");
  const RunResult r =
      Invoke({"bench", "--instance", dir_.string(), "--format", "json"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  for (const json& row : json::parse(r.out)["rows"]) {
    EXPECT_NE(row["status"], "ok") << row.dump();
  }
}

}  // namespace
}  // namespace ltfair
