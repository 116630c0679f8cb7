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

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <future>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "ltfair/detsolve.h"
#include "ltfair/errors.h"
#include "ltfair/io.h"
#include "ltfair/randsolve.h"
#include "ltfair/verify.h"

namespace ltfair::cli {

namespace {

namespace fs = std::filesystem;

struct RunConfig {
  std::string subcommand;
  std::string instance_path;
  std::string out_path;
  std::string result_path;
  std::string trace_path;
  std::string format = "table";
  uint64_t seed = 0;
  int delta = 0;
  int samples = 10000;
  double epsilon_L = 0.0;
  std::string oracle_mode = "auto";
  uint64_t enum_budget = 1'000'000;
};

// An instance-level failure that maps to exit code 1.
struct Infeasible : Error {
  using Error::Error;
};

SubmaxMode ParseMode(const std::string& name) {
  if (name == "exact") return SubmaxMode::kExact;
  if (name == "heuristic") return SubmaxMode::kHeuristic;
  return SubmaxMode::kAuto;
}

std::string Fixed(double v, int precision = 6) {
  if (std::isnan(v)) return "-";
  std::ostringstream os;
  os << std::fixed << std::setprecision(precision) << v;
  return os.str();
}

std::string Counts(const std::vector<double>& counts) {
  std::ostringstream os;
  os << "(";
  for (size_t t = 0; t < counts.size(); ++t) {
    os << (t ? ", " : "") << Fixed(counts[t], 4);
  }
  os << ")";
  return os.str();
}

class Output {
 public:
  Output(const RunConfig& cfg, std::ostream& out) : cfg_(cfg), out_(out) {}

  bool json() const { return cfg_.format == "json"; }

  void Emit(const Json& doc, const std::string& table) {
    const std::string text = json() ? doc.dump(2) + "\n" : table;
    if (cfg_.out_path.empty()) {
      out_ << text;
    } else {
      WriteFile(cfg_.out_path, text);
    }
  }

 private:
  const RunConfig& cfg_;
  std::ostream& out_;
};

// Line-delimited trace file; a no-op sink when no path is set.
class TraceFile {
 public:
  explicit TraceFile(const std::string& path) {
    if (path.empty()) return;
    stream_.open(path, std::ios::trunc);
    if (!stream_) throw IoError("cannot open trace file '" + path + "'");
  }

  TraceSink sink() {
    if (!stream_.is_open()) return {};
    return [this](const std::string& line) { stream_ << line << '\n'; };
  }

 private:
  std::ofstream stream_;
};

const Objective& RequireObjective(const Problem& p, const std::string& path) {
  if (!p.objective) throw ParseError(path + ": objective: missing field");
  return *p.objective;
}

ContinuousGreedyConfig DetConfig(const RunConfig& cfg, TraceSink trace,
                                 std::ostream& err) {
  ContinuousGreedyConfig c;
  c.delta = cfg.delta;
  c.estimation.samples = cfg.samples;
  c.estimation.seed = cfg.seed;
  c.trace = std::move(trace);
  c.diagnostics = [&err](const std::string& msg) {
    err << "warning: " << msg << "\n";
  };
  return c;
}

EllipsoidConfig RandConfig(const RunConfig& cfg, TraceSink trace) {
  EllipsoidConfig c;
  c.epsilon_L = cfg.epsilon_L;
  c.oracle_mode = ParseMode(cfg.oracle_mode);
  c.enumeration_budget = cfg.enum_budget;
  c.trace = std::move(trace);
  return c;
}

// Deterministic solvers need the rounded relaxation before B itself.
void CheckDeterministicInstance(const Instance& instance) {
  try {
    RequireRoundedRelaxationFeasible(instance);
  } catch (const InfeasibleRelaxation& e) {
    throw Infeasible(std::string("P.2 infeasible: ") + e.what());
  }
}

std::string DetTable(const std::string& title, const DeterministicSolution& s,
                     const Instance& instance) {
  std::ostringstream os;
  os << title << "\n";
  os << "  set               " << s.set.ToString() << "\n";
  os << "  value             " << Fixed(s.value) << "\n";
  if (!std::isnan(s.fractional_value)) {
    os << "  fractional value  " << Fixed(s.fractional_value) << "\n";
  }
  os << "  group counts      ";
  const std::vector<int> counts = GroupCounts(instance, s.set);
  for (size_t t = 0; t < counts.size(); ++t) {
    os << (t ? ", " : "") << instance.groups[t].name << "=" << counts[t];
  }
  os << "\n";
  return os.str();
}

std::string DistributionTable(const SelectionDistribution& d) {
  std::ostringstream os;
  os << "  distribution:\n";
  for (const WeightedSet& ws : d.support) {
    os << "    " << std::left << std::setw(18) << ws.set.ToString()
       << Fixed(ws.probability) << "\n";
  }
  os << "    " << std::left << std::setw(18) << "{} (residual)"
     << Fixed(d.residual) << "\n";
  return os.str();
}

int SolveDet(const RunConfig& cfg, std::ostream& out, std::ostream& err,
             bool greedy) {
  const Problem p = LoadProblem(cfg.instance_path);
  const Objective& f = RequireObjective(p, cfg.instance_path);
  CheckDeterministicInstance(p.instance);
  TraceFile trace(cfg.trace_path);
  DeterministicSolution s;
  try {
    s = greedy ? FastGreedy(p.instance, f)
               : SolveDeterministic(p.instance, f,
                                    DetConfig(cfg, trace.sink(), err));
  } catch (const EmptyPolytope& e) {
    throw Infeasible(std::string("polytope B is empty: ") + e.what());
  }
  Output(cfg, out).Emit(
      DeterministicSolutionToJson(s, p.instance, !greedy),
      DetTable(greedy ? "fast greedy" : "continuous greedy + pipage", s,
               p.instance));
  return kExitOk;
}

int SolveRand(const RunConfig& cfg, std::ostream& out) {
  const Problem p = LoadProblem(cfg.instance_path);
  const Objective& f = RequireObjective(p, cfg.instance_path);
  TraceFile trace(cfg.trace_path);
  RandomizedResult r;
  try {
    r = SolveRandomized(p.instance, f, RandConfig(cfg, trace.sink()));
  } catch (const InfeasibleInstance& e) {
    throw Infeasible(e.what());
  }
  const Json doc = RandomizedResultToJson(r, p.instance);
  std::ostringstream table;
  table << "randomized (ellipsoid, " << SubmaxModeName(r.report.mode)
        << " oracle)\n";
  table << "  value             " << Fixed(r.report.value) << "\n";
  table << "  L*                " << Fixed(r.report.L_star) << "\n";
  table << "  certificate       " << r.report.certificate << " (epsilon "
        << r.report.epsilon_L << ")\n";
  std::vector<double> counts;
  for (const auto& c : doc["expected_group_counts"]) {
    counts.push_back(c.get<double>());
  }
  table << "  expected counts   " << Counts(counts) << "\n";
  table << DistributionTable(r.distribution);
  Output(cfg, out).Emit(doc, table.str());
  return kExitOk;
}

int Oracle(const RunConfig& cfg, std::ostream& out) {
  const Problem p = LoadProblem(cfg.instance_path);
  const Objective& f = RequireObjective(p, cfg.instance_path);
  BruteForceResult r;
  try {
    r = BruteForceLp(p.instance, f, cfg.enum_budget);
  } catch (const InfeasibleInstance& e) {
    throw Infeasible(e.what());
  }
  std::ostringstream table;
  table << "brute-force LP\n";
  table << "  OPT_LP            " << Fixed(r.optimum) << "\n";
  table << DistributionTable(r.distribution);
  Output(cfg, out).Emit(BruteForceResultToJson(r), table.str());
  return kExitOk;
}

int Check(const RunConfig& cfg, std::ostream& out) {
  if (cfg.result_path.empty()) {
    throw InvalidArgument("check needs --result PATH");
  }
  const Problem p = LoadProblem(cfg.instance_path);
  const Objective& f = RequireObjective(p, cfg.instance_path);
  const SelectionDistribution d =
      ParseResultDistribution(ReadFile(cfg.result_path), cfg.result_path);
  const AuditReport report = AuditDistribution(d, p.instance, f);
  std::ostringstream table;
  table << "audit\n";
  table << "  feasible          " << (report.feasible ? "yes" : "no") << "\n";
  table << "  expected counts   " << Counts(report.group_counts) << "\n";
  table << "  total probability " << Fixed(report.total_probability) << "\n";
  table << "  budget respected  " << (report.budget_ok ? "yes" : "no") << "\n";
  table << "  max violation     " << report.max_violation << "\n";
  table << "  value             " << Fixed(report.value) << "\n";
  Output(cfg, out).Emit(AuditReportToJson(report), table.str());
  return kExitOk;
}

// ---------------------------------------------------------------------------
// bench

struct BenchRow {
  std::string instance;
  std::string solver;
  std::string status = "ok";
  double value = std::nan("");
  double opt = std::nan("");
  double ratio = std::nan("");
  std::string feasibility = "-";
  double seconds = 0.0;
};

std::string SetFeasibility(const ItemSet& s, const Instance& instance,
                           const Objective& f) {
  if (AuditDistribution(SelectionDistribution::Point(s), instance, f)
          .feasible) {
    return "strict";
  }
  bool near = s.size() <= instance.budget;
  for (const GroupSpec& g : instance.groups) {
    const int count = s.CountIn(g.members);
    near &= count >= FloorBound(g.alpha) && count <= CeilBound(g.beta);
  }
  return near ? "near" : "infeasible";
}

std::vector<BenchRow> BenchInstance(const std::string& name,
                                    const std::string& path,
                                    const RunConfig& cfg) {
  std::vector<BenchRow> rows;
  auto timed = [&](const std::string& solver,
                   const std::function<void(BenchRow&)>& body) {
    BenchRow row;
    row.instance = name;
    row.solver = solver;
    const auto start = std::chrono::steady_clock::now();
    try {
      body(row);
    } catch (const Error& e) {
      row.status = e.what();
    }
    row.seconds = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    rows.push_back(std::move(row));
  };

  Problem p;
  try {
    p = LoadProblem(path);
    RequireObjective(p, path);
  } catch (const Error& e) {
    BenchRow row;
    row.instance = name;
    row.solver = "load";
    row.status = e.what();
    return {row};
  }
  const Instance& instance = p.instance;
  const Objective& f = *p.objective;

  double opt = std::nan("");
  timed("oracle", [&](BenchRow& row) {
    const BruteForceResult r = BruteForceLp(instance, f, cfg.enum_budget);
    opt = r.optimum;
    row.value = r.optimum;
    row.feasibility =
        AuditDistribution(r.distribution, instance, f).feasible ? "strict"
                                                                : "infeasible";
  });
  std::ostringstream sink;
  timed("solve-det", [&](BenchRow& row) {
    const DeterministicSolution s =
        SolveDeterministic(instance, f, DetConfig(cfg, {}, sink));
    row.value = s.value;
    row.feasibility = SetFeasibility(s.set, instance, f);
  });
  timed("solve-greedy", [&](BenchRow& row) {
    const DeterministicSolution s = FastGreedy(instance, f);
    row.value = s.value;
    row.feasibility = SetFeasibility(s.set, instance, f);
  });
  timed("solve-rand", [&](BenchRow& row) {
    const RandomizedResult r = SolveRandomized(instance, f, RandConfig(cfg, {}));
    row.value = r.report.value;
    row.feasibility =
        AuditDistribution(r.distribution, instance, f).feasible ? "strict"
                                                                : "infeasible";
  });
  for (BenchRow& row : rows) {
    row.opt = opt;
    if (row.status == "ok" && !std::isnan(opt) && opt > 0.0) {
      row.ratio = row.value / opt;
    }
  }
  return rows;
}

int Bench(const RunConfig& cfg, std::ostream& out) {
  std::map<std::string, std::string> instances;  // ordered by name
  const fs::path root(cfg.instance_path);
  std::error_code ec;
  if (fs::is_directory(root, ec)) {
    for (const auto& entry : fs::directory_iterator(root)) {
      if (entry.is_regular_file() && entry.path().extension() == ".json") {
        instances.emplace(entry.path().filename().string(),
                          entry.path().string());
      }
    }
  } else if (fs::is_regular_file(root, ec)) {
    instances.emplace(root.filename().string(), root.string());
  } else {
    throw IoError("no instance file or directory at '" + cfg.instance_path +
                  "'");
  }

  std::vector<std::future<std::vector<BenchRow>>> jobs;
  for (const auto& [name, path] : instances) {
    jobs.push_back(std::async(std::launch::async, BenchInstance, name, path,
                              std::cref(cfg)));
  }
  std::vector<BenchRow> rows;
  for (auto& job : jobs) {
    for (BenchRow& row : job.get()) rows.push_back(std::move(row));
  }

  auto number = [](double v) { return std::isnan(v) ? Json() : Json(v); };
  Json doc = Json::array();
  std::ostringstream table;
  table << std::left << std::setw(24) << "instance" << std::setw(14)
        << "solver" << std::setw(12) << "value" << std::setw(12) << "OPT_LP"
        << std::setw(10) << "ratio" << std::setw(12) << "feasibility"
        << std::setw(10) << "time(s)"
        << "status\n";
  for (const BenchRow& row : rows) {
    doc.push_back(Json{{"instance", row.instance},
                       {"solver", row.solver},
                       {"status", row.status},
                       {"value", number(row.value)},
                       {"opt_lp", number(row.opt)},
                       {"ratio", number(row.ratio)},
                       {"feasibility", row.feasibility}});
    table << std::left << std::setw(24) << row.instance << std::setw(14)
          << row.solver << std::setw(12) << Fixed(row.value, 4)
          << std::setw(12) << Fixed(row.opt, 4) << std::setw(10)
          << Fixed(row.ratio, 4) << std::setw(12) << row.feasibility
          << std::setw(10) << Fixed(row.seconds, 3) << row.status << "\n";
  }
  Output(cfg, out).Emit(Json{{"rows", doc}}, table.str());
  return kExitOk;
}

void Validate(const RunConfig& cfg) {
  if (cfg.samples <= 0) throw InvalidArgument("--samples must be positive");
  if (cfg.delta < 0) throw InvalidArgument("--delta must be non-negative");
  if (cfg.epsilon_L < 0.0 || !std::isfinite(cfg.epsilon_L)) {
    throw InvalidArgument("--epsilon-l must be a positive number");
  }
  if (cfg.enum_budget == 0) {
    throw InvalidArgument("--enum-budget must be positive");
  }
}

int Dispatch(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  Validate(cfg);
  if (cfg.subcommand == "solve-det") return SolveDet(cfg, out, err, false);
  if (cfg.subcommand == "solve-greedy") return SolveDet(cfg, out, err, true);
  if (cfg.subcommand == "solve-rand") return SolveRand(cfg, out);
  if (cfg.subcommand == "oracle") return Oracle(cfg, out);
  if (cfg.subcommand == "check") return Check(cfg, out);
  return Bench(cfg, out);
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Long-term fair submodular selection"};
  app.name("ltfair");
  app.require_subcommand(1);
  RunConfig cfg;

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"solve-det", "continuous greedy with pipage rounding"},
      {"solve-greedy", "greedy over the rounded-bounds matroid"},
      {"solve-rand", "randomized solver (ellipsoid on the dual LP)"},
      {"oracle", "brute-force LP over every budget-feasible set"},
      {"check", "audit a result file against an instance"},
      {"bench", "run every solver on an instance directory"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--instance", cfg.instance_path,
                    name == "bench" ? "instance directory (or one file)"
                                    : "instance file")
        ->required();
    sub->add_option("--out", cfg.out_path, "write the result here");
    sub->add_option("--format", cfg.format, "table or json")
        ->check(CLI::IsMember({"table", "json"}));
    sub->add_option("--seed", cfg.seed, "Monte Carlo seed");
    sub->add_option("--delta", cfg.delta, "continuous greedy iterations");
    sub->add_option("--samples", cfg.samples, "Monte Carlo samples");
    sub->add_option("--epsilon-l", cfg.epsilon_L, "binary search tolerance");
    sub->add_option("--oracle-mode", cfg.oracle_mode, "exact|heuristic|auto")
        ->check(CLI::IsMember({"exact", "heuristic", "auto"}));
    sub->add_option("--enum-budget", cfg.enum_budget,
                    "largest enumerated family");
    sub->add_option("--trace", cfg.trace_path, "line-delimited JSON trace");
    if (name == "check") {
      sub->add_option("--result", cfg.result_path, "result file")->required();
    }
    sub->callback([&cfg, name = name] { cfg.subcommand = name; });
  }

  std::vector<const char*> argv = {"ltfair"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInputError;
  }

  try {
    return Dispatch(cfg, out, err);
  } catch (const Infeasible& e) {
    err << "error: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const EmptyPolytope& e) {
    err << "error: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const InfeasibleInstance& e) {
    err << "error: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

int Run(int argc, const char* const* argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return Run(args, std::cout, std::cerr);
}

}  // namespace ltfair::cli
