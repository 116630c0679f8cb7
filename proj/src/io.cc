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

#include "ltfair/io.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

#include "ltfair/errors.h"

namespace ltfair {

namespace {

// Raises a ParseError naming the file and the JSON path of the field.
[[noreturn]] void Fail(const std::string& source, const std::string& path,
                       const std::string& what) {
  throw ParseError(source + ": " + path + ": " + what);
}

Json ParseJson(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    size_t line = 1;
    size_t column = 1;
    const size_t limit = std::min(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (size_t k = 0; k < limit; ++k) {
      if (text[k] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(source + ":" + std::to_string(line) + ":" +
                     std::to_string(column) + ": malformed JSON (" + e.what() +
                     ")");
  }
}

const Json& Field(const Json& obj, const char* key, const std::string& source,
                  const std::string& path) {
  if (!obj.is_object()) Fail(source, path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) Fail(source, path + "." + key, "missing field");
  return *it;
}

double Number(const Json& v, const std::string& source,
              const std::string& path) {
  if (!v.is_number()) Fail(source, path, "expected a number, got " + v.dump());
  const double d = v.get<double>();
  if (!std::isfinite(d)) Fail(source, path, "expected a finite number");
  return d;
}

int Integer(const Json& v, const std::string& source,
            const std::string& path) {
  if (!v.is_number_integer()) {
    Fail(source, path, "expected an integer, got " + v.dump());
  }
  const auto value = v.get<long long>();
  if (value < std::numeric_limits<int>::min() ||
      value > std::numeric_limits<int>::max()) {
    Fail(source, path, "integer out of range");
  }
  return static_cast<int>(value);
}

class ItemResolver {
 public:
  ItemResolver(int n, const std::vector<std::string>& names) : n_(n) {
    for (size_t i = 0; i < names.size(); ++i) {
      index_.emplace(names[i], static_cast<ItemId>(i));
    }
  }

  // Ids as integers; names resolved against the item list. Range is checked
  // later by CheckInstance so the error is InvalidInstance.
  ItemId Resolve(const Json& v, const std::string& source,
                 const std::string& path) const {
    if (v.is_number_integer()) return Integer(v, source, path);
    if (v.is_string()) return ResolveKey(v.get<std::string>(), source, path);
    Fail(source, path, "expected an item id or name, got " + v.dump());
  }

  // Object keys: a declared item name, else a decimal id.
  ItemId ResolveKey(const std::string& key, const std::string& source,
                    const std::string& path) const {
    auto it = index_.find(key);
    if (it != index_.end()) return it->second;
    try {
      size_t used = 0;
      const long long id = std::stoll(key, &used);
      if (used == key.size()) {
        if (id < 0 || id >= n_) {
          throw InvalidInstance(source + ": " + path + ": item " + key +
                                " is outside [0, " + std::to_string(n_) + ")");
        }
        return static_cast<ItemId>(id);
      }
    } catch (const std::invalid_argument&) {
    } catch (const std::out_of_range&) {
    }
    Fail(source, path, "unknown item '" + key + "'");
  }

 private:
  int n_;
  std::map<std::string, ItemId> index_;
};

std::shared_ptr<const Objective> ParseObjective(const Json& j, int n,
                                                const ItemResolver& items,
                                                const std::string& source) {
  const std::string path = "objective";
  const Json& type = Field(j, "type", source, path);
  if (!type.is_string()) Fail(source, path + ".type", "expected a string");
  const std::string kind = type.get<std::string>();
  try {
    if (kind == "modular") {
      const Json& weights = Field(j, "weights", source, path);
      if (!weights.is_array() || static_cast<int>(weights.size()) != n) {
        Fail(source, path + ".weights",
             "expected an array of " + std::to_string(n) + " numbers");
      }
      std::vector<double> w;
      for (size_t i = 0; i < weights.size(); ++i) {
        w.push_back(Number(weights[i], source,
                           path + ".weights[" + std::to_string(i) + "]"));
      }
      return std::make_shared<ModularObjective>(std::move(w));
    }
    if (kind == "facility_location") {
      const Json& sim = Field(j, "similarity", source, path);
      if (!sim.is_array() || sim.empty()) {
        Fail(source, path + ".similarity", "expected a non-empty matrix");
      }
      std::vector<std::vector<double>> rows;
      for (size_t r = 0; r < sim.size(); ++r) {
        const std::string row_path =
            path + ".similarity[" + std::to_string(r) + "]";
        if (!sim[r].is_array() || static_cast<int>(sim[r].size()) != n) {
          Fail(source, row_path,
               "expected a row of " + std::to_string(n) + " numbers");
        }
        std::vector<double> row;
        for (size_t c = 0; c < sim[r].size(); ++c) {
          row.push_back(
              Number(sim[r][c], source, row_path + "[" + std::to_string(c) + "]"));
        }
        rows.push_back(std::move(row));
      }
      return std::make_shared<FacilityLocationObjective>(std::move(rows));
    }
    if (kind == "coverage") {
      const Json& elements = Field(j, "elements", source, path);
      if (!elements.is_object()) {
        Fail(source, path + ".elements", "expected an object of weights");
      }
      std::vector<std::string> names;
      std::vector<double> weights;
      std::map<std::string, int> element_index;
      for (const auto& [name, weight] : elements.items()) {
        element_index.emplace(name, static_cast<int>(names.size()));
        names.push_back(name);
        weights.push_back(
            Number(weight, source, path + ".elements." + name));
      }
      const Json& covers = Field(j, "covers", source, path);
      if (!covers.is_object()) {
        Fail(source, path + ".covers", "expected an object");
      }
      std::vector<std::vector<int>> cover_lists(n);
      for (const auto& [key, list] : covers.items()) {
        const std::string entry_path = path + ".covers." + key;
        const ItemId item = items.ResolveKey(key, source, entry_path);
        if (!list.is_array()) Fail(source, entry_path, "expected an array");
        for (const Json& e : list) {
          if (!e.is_string()) {
            Fail(source, entry_path, "expected element names");
          }
          auto it = element_index.find(e.get<std::string>());
          if (it == element_index.end()) {
            Fail(source, entry_path,
                 "unknown element '" + e.get<std::string>() + "'");
          }
          cover_lists[item].push_back(it->second);
        }
      }
      return std::make_shared<CoverageObjective>(
          std::move(names), std::move(weights), std::move(cover_lists));
    }
  } catch (const InvalidArgument& e) {
    Fail(source, path, e.what());
  }
  Fail(source, path + ".type", "unknown objective type '" + kind + "'");
}

Json DoubleArray(const std::vector<double>& values) {
  Json arr = Json::array();
  for (double v : values) arr.push_back(v);
  return arr;
}

}  // namespace

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteFile(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << contents;
  out.flush();
  if (!out) throw IoError("failed writing '" + path + "'");
}

Problem ParseProblem(const std::string& text, const std::string& source) {
  const Json root = ParseJson(text, source);
  if (!root.is_object()) Fail(source, "$", "expected a JSON object");

  Instance instance;
  const Json& items = Field(root, "items", source, "$");
  if (items.is_number_integer()) {
    instance.item_count = Integer(items, source, "items");
  } else if (items.is_array()) {
    for (size_t i = 0; i < items.size(); ++i) {
      if (!items[i].is_string()) {
        Fail(source, "items[" + std::to_string(i) + "]",
             "expected an item name");
      }
      instance.item_names.push_back(items[i].get<std::string>());
    }
    instance.item_count = static_cast<int>(instance.item_names.size());
  } else {
    Fail(source, "items", "expected an integer or a list of names");
  }
  if (instance.item_count < 1) {
    throw InvalidInstance(source + ": items: item count must be positive");
  }
  instance.budget = Integer(Field(root, "budget", source, "$"), source, "budget");

  const ItemResolver resolver(instance.item_count, instance.item_names);
  const Json& groups = Field(root, "groups", source, "$");
  if (!groups.is_array()) Fail(source, "groups", "expected an array");
  for (size_t t = 0; t < groups.size(); ++t) {
    const std::string path = "groups[" + std::to_string(t) + "]";
    const Json& g = groups[t];
    GroupSpec spec;
    const Json& name = Field(g, "name", source, path);
    if (!name.is_string()) Fail(source, path + ".name", "expected a string");
    spec.name = name.get<std::string>();
    const Json& members = Field(g, "members", source, path);
    if (!members.is_array()) {
      Fail(source, path + ".members", "expected an array");
    }
    for (size_t k = 0; k < members.size(); ++k) {
      spec.members.push_back(resolver.Resolve(
          members[k], source, path + ".members[" + std::to_string(k) + "]"));
    }
    spec.alpha = Number(Field(g, "alpha", source, path), source, path + ".alpha");
    spec.beta = Number(Field(g, "beta", source, path), source, path + ".beta");
    instance.groups.push_back(std::move(spec));
  }

  Problem problem;
  try {
    problem.instance =
        MakeInstance(instance.item_count, std::move(instance.groups),
                     instance.budget, std::move(instance.item_names));
  } catch (const InvalidInstance& e) {
    throw InvalidInstance(source + ": " + e.what());
  }
  auto objective = root.find("objective");
  if (objective != root.end() && !objective->is_null()) {
    problem.objective = ParseObjective(*objective, problem.instance.item_count,
                                       resolver, source);
  }
  return problem;
}

Problem LoadProblem(const std::string& path) {
  return ParseProblem(ReadFile(path), path);
}

Json ObjectiveToJson(const Objective& objective,
                     const std::vector<std::string>& item_names) {
  Json j;
  j["type"] = ObjectiveKindName(objective.kind());
  switch (objective.kind()) {
    case ObjectiveKind::kModular:
      j["weights"] =
          DoubleArray(static_cast<const ModularObjective&>(objective).weights());
      break;
    case ObjectiveKind::kFacilityLocation: {
      Json rows = Json::array();
      for (const auto& row :
           static_cast<const FacilityLocationObjective&>(objective)
               .similarity()) {
        rows.push_back(DoubleArray(row));
      }
      j["similarity"] = std::move(rows);
      break;
    }
    case ObjectiveKind::kCoverage: {
      const auto& cov = static_cast<const CoverageObjective&>(objective);
      Json elements = Json::object();
      for (size_t u = 0; u < cov.weights().size(); ++u) {
        elements[cov.element_names()[u]] = cov.weights()[u];
      }
      Json covers = Json::object();
      for (size_t i = 0; i < cov.covers().size(); ++i) {
        if (cov.covers()[i].empty()) continue;
        Json list = Json::array();
        for (int u : cov.covers()[i]) list.push_back(cov.element_names()[u]);
        const std::string key =
            item_names.empty() ? std::to_string(i) : item_names[i];
        covers[key] = std::move(list);
      }
      j["elements"] = std::move(elements);
      j["covers"] = std::move(covers);
      break;
    }
    case ObjectiveKind::kCustom:
      throw InvalidArgument("custom objectives have no file representation");
  }
  return j;
}

Json ProblemToJson(const Instance& instance, const Objective* objective) {
  Json j;
  if (instance.item_names.empty()) {
    j["items"] = instance.item_count;
  } else {
    j["items"] = instance.item_names;
  }
  j["budget"] = instance.budget;
  Json groups = Json::array();
  for (const GroupSpec& g : instance.groups) {
    Json group;
    group["name"] = g.name;
    group["members"] = g.members;
    group["alpha"] = g.alpha;
    group["beta"] = g.beta;
    groups.push_back(std::move(group));
  }
  j["groups"] = std::move(groups);
  if (objective != nullptr) {
    j["objective"] = ObjectiveToJson(*objective, instance.item_names);
  }
  return j;
}

std::string SerializeProblem(const Instance& instance,
                             const Objective* objective) {
  return ProblemToJson(instance, objective).dump(2) + "\n";
}

void SaveProblem(const Instance& instance, const Objective* objective,
                 const std::string& path) {
  WriteFile(path, SerializeProblem(instance, objective));
}

void SaveInstance(const Instance& instance, const std::string& path) {
  SaveProblem(instance, nullptr, path);
}

// ---------------------------------------------------------------------------
// Result documents

Json ItemSetToJson(const ItemSet& s) { return Json(s.ids()); }

Json DistributionToJson(const SelectionDistribution& d) {
  Json support = Json::array();
  for (const WeightedSet& ws : d.support) {
    support.push_back(Json{{"set", ItemSetToJson(ws.set)},
                           {"prob", ws.probability}});
  }
  return support;
}

namespace {

std::vector<double> ExpectedCounts(const SelectionDistribution& d,
                                   const Instance& instance) {
  std::vector<double> counts(instance.group_count(), 0.0);
  for (const WeightedSet& ws : d.support) {
    for (int t = 0; t < instance.group_count(); ++t) {
      counts[t] += ws.probability * ws.set.CountIn(instance.groups[t].members);
    }
  }
  return counts;
}

}  // namespace

Json RandomizedResultToJson(const RandomizedResult& result,
                            const Instance& instance) {
  const RandomizedReport& r = result.report;
  Json j;
  j["value"] = r.value;
  j["L_star"] = r.L_star;
  j["mode"] = SubmaxModeName(r.mode);
  j["distribution"] = DistributionToJson(result.distribution);
  j["residual"] = result.distribution.residual;
  j["expected_group_counts"] =
      DoubleArray(ExpectedCounts(result.distribution, instance));
  j["certificate"] = Json{{"type", r.certificate}, {"epsilon", r.epsilon_L}};
  j["stats"] = Json{{"probes", r.probes},
                    {"ellipsoid_iterations", r.total_iterations},
                    {"reinitializations", r.reinitializations},
                    {"pool_size", r.pool.size()},
                    {"opt_upper_bound", r.opt_upper_bound}};
  return j;
}

Json DeterministicSolutionToJson(const DeterministicSolution& solution,
                                 const Instance& instance, bool with_trace) {
  Json j;
  j["set"] = ItemSetToJson(solution.set);
  j["value"] = solution.value;
  if (std::isnan(solution.fractional_value)) {
    j["fractional_value"] = nullptr;
  } else {
    j["fractional_value"] = solution.fractional_value;
  }
  j["group_counts"] = GroupCounts(instance, solution.set);
  if (with_trace) {
    Json swaps = Json::array();
    for (const RoundingSwap& s : solution.trace) {
      swaps.push_back(Json{{"phase", s.phase},
                           {"i", s.i},
                           {"j", s.j},
                           {"theta", s.theta},
                           {"before", s.before},
                           {"after", s.after}});
    }
    j["rounding"] = std::move(swaps);
  }
  return j;
}

Json AuditReportToJson(const AuditReport& report) {
  Json j;
  j["feasible"] = report.feasible;
  j["group_counts"] = DoubleArray(report.group_counts);
  j["total_probability"] = report.total_probability;
  j["budget_ok"] = report.budget_ok;
  j["max_violation"] = report.max_violation;
  j["value"] = report.value;
  return j;
}

Json BruteForceResultToJson(const BruteForceResult& result) {
  Json j;
  j["optimum"] = result.optimum;
  j["distribution"] = DistributionToJson(result.distribution);
  j["residual"] = result.distribution.residual;
  return j;
}

SelectionDistribution ParseResultDistribution(const std::string& text,
                                              const std::string& source) {
  const Json root = ParseJson(text, source);
  if (!root.is_object()) Fail(source, "$", "expected a JSON object");
  auto read_set = [&](const Json& v, const std::string& path) {
    if (!v.is_array()) Fail(source, path, "expected an array of item ids");
    std::vector<ItemId> ids;
    for (size_t k = 0; k < v.size(); ++k) {
      ids.push_back(Integer(v[k], source, path + "[" + std::to_string(k) + "]"));
    }
    return ItemSet(std::move(ids));
  };

  if (root.contains("distribution")) {
    const Json& dist = root["distribution"];
    if (!dist.is_array()) Fail(source, "distribution", "expected an array");
    SelectionDistribution d;
    double mass = 0.0;
    for (size_t k = 0; k < dist.size(); ++k) {
      const std::string path = "distribution[" + std::to_string(k) + "]";
      WeightedSet ws;
      ws.set = read_set(Field(dist[k], "set", source, path), path + ".set");
      ws.probability =
          Number(Field(dist[k], "prob", source, path), source, path + ".prob");
      mass += ws.probability;
      d.support.push_back(std::move(ws));
    }
    auto residual = root.find("residual");
    d.residual = residual != root.end()
                     ? Number(*residual, source, "residual")
                     : std::max(0.0, 1.0 - mass);
    return d;
  }
  if (root.contains("set")) {
    return SelectionDistribution::Point(read_set(root["set"], "set"));
  }
  Fail(source, "$", "expected a 'distribution' or a 'set' field");
}

}  // namespace ltfair
