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

// Instance files and result documents.
//
// Instance file (UTF-8 JSON):
//   {"items": <n> | [names...],
//    "budget": <int>,
//    "groups": [{"name": str, "members": [id|name...],
//                "alpha": num, "beta": num}, ...],
//    "objective": {"type": "coverage",
//                  "elements": {name: weight, ...},
//                  "covers": {item: [element names], ...}}
//               | {"type": "modular", "weights": [...]}
//               | {"type": "facility_location", "similarity": [[...], ...]}}

#ifndef LTFAIR_IO_H_
#define LTFAIR_IO_H_

#include <memory>
#include <string>

#include "json.hpp"
#include "ltfair/detsolve.h"
#include "ltfair/distribution.h"
#include "ltfair/instance.h"
#include "ltfair/objectives.h"
#include "ltfair/randsolve.h"
#include "ltfair/verify.h"

namespace ltfair {

using Json = nlohmann::ordered_json;

// An instance together with the objective declared in its file. The
// objective is null when the file has none.
struct Problem {
  Instance instance;
  std::shared_ptr<const Objective> objective;
};

// Throws ParseError (with line or field path) or InvalidInstance.
Problem ParseProblem(const std::string& text,
                     const std::string& source = "<string>");
Problem LoadProblem(const std::string& path);

// Canonical field order; reals in shortest round-trip form. Objectives of
// kind kCustom cannot be serialized and raise InvalidArgument.
Json ProblemToJson(const Instance& instance, const Objective* objective);
std::string SerializeProblem(const Instance& instance,
                             const Objective* objective);
// Throws IoError when the file cannot be written.
void SaveProblem(const Instance& instance, const Objective* objective,
                 const std::string& path);
void SaveInstance(const Instance& instance, const std::string& path);

Json ObjectiveToJson(const Objective& objective,
                     const std::vector<std::string>& item_names = {});

Json ItemSetToJson(const ItemSet& s);
Json DistributionToJson(const SelectionDistribution& d);
Json RandomizedResultToJson(const RandomizedResult& result,
                            const Instance& instance);
Json DeterministicSolutionToJson(const DeterministicSolution& solution,
                                 const Instance& instance, bool with_trace);
Json AuditReportToJson(const AuditReport& report);
Json BruteForceResultToJson(const BruteForceResult& result);

// Reads a result document: either {"distribution": [{"set", "prob"}...],
// "residual": p} or a deterministic {"set": [...]}. A missing residual is
// taken as 1 - sum(prob). Throws ParseError.
SelectionDistribution ParseResultDistribution(const std::string& text,
                                              const std::string& source);

std::string ReadFile(const std::string& path);
void WriteFile(const std::string& path, const std::string& contents);

}  // namespace ltfair

#endif  // LTFAIR_IO_H_
