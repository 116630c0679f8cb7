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

#include "ltfair/instance.h"

#include <algorithm>
#include <cmath>

#include "ltfair/errors.h"
#include "ltfair/lp.h"

namespace ltfair {

namespace {

constexpr double kBoundSnap = 1e-9;

std::string GroupLabel(const GroupSpec& g, size_t t) {
  return "group " + std::to_string(t) + (g.name.empty() ? "" : " '" + g.name + "'");
}

}  // namespace

int FloorBound(double value) {
  return static_cast<int>(std::floor(value + kBoundSnap));
}

int CeilBound(double value) {
  return static_cast<int>(std::ceil(value - kBoundSnap));
}

Instance MakeInstance(int item_count, std::vector<GroupSpec> groups,
                      int budget, std::vector<std::string> item_names) {
  Instance instance;
  instance.item_count = item_count;
  instance.budget = budget;
  instance.item_names = std::move(item_names);
  for (GroupSpec& g : groups) {
    std::sort(g.members.begin(), g.members.end());
    g.members.erase(std::unique(g.members.begin(), g.members.end()),
                    g.members.end());
  }
  instance.groups = std::move(groups);
  CheckInstance(instance);
  return instance;
}

void CheckInstance(const Instance& instance) {
  if (instance.item_count < 1) {
    throw InvalidInstance("item count must be positive");
  }
  if (instance.budget < 1) throw InvalidInstance("budget must be positive");
  if (instance.groups.empty()) {
    throw InvalidInstance("at least one group is required");
  }
  if (!instance.item_names.empty() &&
      static_cast<int>(instance.item_names.size()) != instance.item_count) {
    throw InvalidInstance("item name list does not match item count");
  }
  for (size_t t = 0; t < instance.groups.size(); ++t) {
    const GroupSpec& g = instance.groups[t];
    const std::string label = GroupLabel(g, t);
    if (!std::is_sorted(g.members.begin(), g.members.end()) ||
        std::adjacent_find(g.members.begin(), g.members.end()) !=
            g.members.end()) {
      throw InvalidInstance(label + ": members must be sorted and unique");
    }
    for (ItemId i : g.members) {
      if (i < 0 || i >= instance.item_count) {
        throw InvalidInstance(label + ": member " + std::to_string(i) +
                              " is outside [0, " +
                              std::to_string(instance.item_count) + ")");
      }
    }
    if (!std::isfinite(g.alpha) || !std::isfinite(g.beta) || g.alpha < 0.0 ||
        g.beta < 0.0) {
      throw InvalidInstance(label + ": bounds must be finite and non-negative");
    }
    if (g.alpha > g.beta) {
      throw InvalidInstance(label + ": alpha " + std::to_string(g.alpha) +
                            " exceeds beta " + std::to_string(g.beta));
    }
    if (g.alpha > static_cast<double>(g.members.size())) {
      throw InvalidInstance(label + ": alpha " + std::to_string(g.alpha) +
                            " exceeds group size " +
                            std::to_string(g.members.size()));
    }
  }
}

StructureReport Validate(const Instance& instance) {
  CheckInstance(instance);
  const int n = instance.item_count;
  StructureReport report;

  std::vector<int> membership_count(n, 0);
  for (const GroupSpec& g : instance.groups) {
    for (ItemId i : g.members) ++membership_count[i];
  }
  report.disjoint = std::all_of(membership_count.begin(),
                                membership_count.end(),
                                [](int c) { return c <= 1; });
  report.covering = std::all_of(membership_count.begin(),
                                membership_count.end(),
                                [](int c) { return c >= 1; });
  report.integral_bounds = std::all_of(
      instance.groups.begin(), instance.groups.end(), [](const GroupSpec& g) {
        return g.alpha == std::floor(g.alpha) && g.beta == std::floor(g.beta);
      });

  LinearProgram lp;
  lp.objective.assign(n, 0.0);
  lp.upper_bounds.assign(n, 1.0);
  lp.AddRow(std::vector<double>(n, 1.0), RowSense::kLessEqual,
            instance.effective_budget());
  for (const GroupSpec& g : instance.groups) {
    std::vector<double> row(n, 0.0);
    for (ItemId i : g.members) row[i] = 1.0;
    lp.AddRow(row, RowSense::kGreaterEqual, g.alpha);
    lp.AddRow(std::move(row), RowSense::kLessEqual, g.beta);
  }
  report.lp_feasible = SolveSimplex(lp).status == LpStatus::kOptimal;
  return report;
}

std::vector<int> GroupCounts(const Instance& instance, const ItemSet& s) {
  std::vector<int> counts;
  counts.reserve(instance.groups.size());
  for (const GroupSpec& g : instance.groups) counts.push_back(s.CountIn(g.members));
  return counts;
}

}  // namespace ltfair
