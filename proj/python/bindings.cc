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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "ltfair/detsolve.h"
#include "ltfair/errors.h"
#include "ltfair/io.h"
#include "ltfair/randsolve.h"
#include "ltfair/verify.h"

namespace py = pybind11;

namespace ltfair {
namespace {

const Objective& RequireObjective(const Problem& p) {
  if (!p.objective) throw InvalidArgument("problem has no objective");
  return *p.objective;
}

SubmaxMode ParseMode(const std::string& mode) {
  if (mode == "exact") return SubmaxMode::kExact;
  if (mode == "heuristic") return SubmaxMode::kHeuristic;
  if (mode == "auto") return SubmaxMode::kAuto;
  throw InvalidArgument("oracle mode must be exact, heuristic or auto, got '" +
                        mode + "'");
}

std::string SolveDet(const Problem& p, int delta, uint64_t seed, int samples,
                     bool trace) {
  ContinuousGreedyConfig cfg;
  cfg.delta = delta;
  cfg.estimation.seed = seed;
  cfg.estimation.samples = samples;
  DeterministicSolution s;
  {
    py::gil_scoped_release release;
    RequireRoundedRelaxationFeasible(p.instance);
    s = SolveDeterministic(p.instance, RequireObjective(p), cfg);
  }
  return DeterministicSolutionToJson(s, p.instance, trace).dump();
}

std::string SolveGreedy(const Problem& p) {
  RequireRoundedRelaxationFeasible(p.instance);
  return DeterministicSolutionToJson(FastGreedy(p.instance, RequireObjective(p)),
                                     p.instance, false)
      .dump();
}

std::string SolveRand(const Problem& p, const std::string& oracle_mode,
                      double epsilon_l, uint64_t enum_budget) {
  EllipsoidConfig cfg;
  cfg.oracle_mode = ParseMode(oracle_mode);
  cfg.epsilon_L = epsilon_l;
  cfg.enumeration_budget = enum_budget;
  RandomizedResult r;
  {
    py::gil_scoped_release release;
    r = SolveRandomized(p.instance, RequireObjective(p), cfg);
  }
  return RandomizedResultToJson(r, p.instance).dump();
}

std::string Oracle(const Problem& p, uint64_t enum_budget) {
  return BruteForceResultToJson(
             BruteForceLp(p.instance, RequireObjective(p), enum_budget))
      .dump();
}

std::string Check(const Problem& p, const std::string& result) {
  const SelectionDistribution d = ParseResultDistribution(result, "<result>");
  return AuditReportToJson(AuditDistribution(d, p.instance, RequireObjective(p)))
      .dump();
}

std::vector<std::vector<int>> SampleSets(const std::string& result,
                                         uint64_t seed, int count) {
  const SelectionDistribution d = ParseResultDistribution(result, "<result>");
  std::vector<std::vector<int>> out;
  for (const ItemSet& s : Sample(d, seed, count)) {
    out.emplace_back(s.begin(), s.end());
  }
  return out;
}

py::tuple ExtensionValue(const Problem& p, const std::vector<double>& y,
                         bool exact, uint64_t seed, int samples) {
  EstimationConfig cfg;
  cfg.seed = seed;
  cfg.samples = samples;
  if (exact) cfg.method = ExtensionMethod::kExact;
  const ExtensionEstimate e = Extension(RequireObjective(p), y, cfg);
  return py::make_tuple(e.value, e.std_error);
}

double Evaluate(const Problem& p, const std::vector<int>& items) {
  return RequireObjective(p).Evaluate(ItemSet(items));
}

}  // namespace
}  // namespace ltfair

PYBIND11_MODULE(_core, m) {
  using namespace ltfair;
  m.doc() = "Native core of ltfair.";

  auto base = py::register_exception<Error>(m, "LtfairError");
  py::register_exception<InvalidArgument>(m, "InvalidArgument", base.ptr());
  py::register_exception<InvalidInstance>(m, "InvalidInstance", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<IoError>(m, "IoError", base.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError",
                                            base.ptr());
  py::register_exception<EmptyPolytope>(m, "EmptyPolytope", base.ptr());
  py::register_exception<InfeasibleRelaxation>(m, "InfeasibleRelaxation",
                                               base.ptr());
  py::register_exception<InfeasibleInstance>(m, "InfeasibleInstance",
                                             base.ptr());
  py::register_exception<EnumerationBudgetExceeded>(
      m, "EnumerationBudgetExceeded", base.ptr());

  py::class_<Problem>(m, "Problem")
      .def_static("from_file", &LoadProblem, py::arg("path"))
      .def_static("from_json", &ParseProblem, py::arg("text"),
                  py::arg("source") = "<string>")
      .def("to_json",
           [](const Problem& p) {
             return SerializeProblem(p.instance, p.objective.get());
           })
      .def_property_readonly("item_count",
                             [](const Problem& p) { return p.instance.item_count; })
      .def_property_readonly("budget",
                             [](const Problem& p) { return p.instance.budget; })
      .def_property_readonly("group_names", [](const Problem& p) {
        std::vector<std::string> names;
        for (const GroupSpec& g : p.instance.groups) names.push_back(g.name);
        return names;
      });

  m.def("solve_det", &SolveDet, py::arg("problem"), py::arg("delta") = 0,
        py::arg("seed") = 0, py::arg("samples") = 10000,
        py::arg("trace") = false);
  m.def("solve_greedy", &SolveGreedy, py::arg("problem"));
  m.def("solve_rand", &SolveRand, py::arg("problem"),
        py::arg("oracle_mode") = "auto", py::arg("epsilon_l") = 0.0,
        py::arg("enum_budget") = 1'000'000);
  m.def("oracle", &Oracle, py::arg("problem"),
        py::arg("enum_budget") = 1'000'000);
  m.def("check", &Check, py::arg("problem"), py::arg("result"));
  m.def("sample", &SampleSets, py::arg("result"), py::arg("seed"),
        py::arg("count"));
  m.def("extension", &ExtensionValue, py::arg("problem"), py::arg("y"),
        py::arg("exact") = false, py::arg("seed") = 0,
        py::arg("samples") = 10000);
  m.def("evaluate", &Evaluate, py::arg("problem"), py::arg("items"));
}
