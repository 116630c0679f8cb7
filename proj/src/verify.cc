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

#include "ltfair/verify.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ltfair/errors.h"
#include "ltfair/lp.h"
#include "ltfair/random.h"

namespace ltfair {

BruteForceResult BruteForceLp(const Instance& instance,
                              const Objective& objective,
                              uint64_t enumeration_budget) {
  const int n = instance.item_count;
  const int b = instance.effective_budget();
  if (CountSubsetsUpTo(n, b, enumeration_budget) > enumeration_budget) {
    throw EnumerationBudgetExceeded("brute-force LP needs more than " +
                                    std::to_string(enumeration_budget) +
                                    " columns");
  }
  std::vector<ItemSet> family;
  ForEachSubsetUpTo(n, b, [&](const ItemSet& s) { family.push_back(s); });

  const int k = static_cast<int>(family.size());
  const int m = instance.group_count();
  LinearProgram lp;
  lp.objective.resize(k);
  std::vector<std::vector<double>> counts(m, std::vector<double>(k));
  for (int s = 0; s < k; ++s) {
    lp.objective[s] = objective.Evaluate(family[s]);
    for (int t = 0; t < m; ++t) {
      counts[t][s] = family[s].CountIn(instance.groups[t].members);
    }
  }
  for (int t = 0; t < m; ++t) {
    lp.AddRow(counts[t], RowSense::kGreaterEqual, instance.groups[t].alpha);
    lp.AddRow(std::move(counts[t]), RowSense::kLessEqual,
              instance.groups[t].beta);
  }
  lp.AddRow(std::vector<double>(k, 1.0), RowSense::kLessEqual, 1.0);

  const LpSolution sol = SolveSimplex(lp);
  if (sol.status != LpStatus::kOptimal) {
    throw InfeasibleInstance("brute-force LP is " + LpStatusName(sol.status));
  }
  BruteForceResult out;
  out.optimum = sol.objective_value;
  double mass = 0.0;
  for (int s = 0; s < k; ++s) {
    if (family[s].empty() || sol.primal[s] <= 1e-12) continue;
    out.distribution.support.push_back({family[s], sol.primal[s]});
    mass += sol.primal[s];
  }
  out.distribution.residual = std::max(0.0, 1.0 - mass);
  return out;
}

AuditReport AuditDistribution(const SelectionDistribution& d,
                              const Instance& instance,
                              const Objective& objective) {
  AuditReport report;
  const int m = instance.group_count();
  report.group_counts.assign(m, 0.0);
  report.budget_ok = true;
  double violation = 0.0;
  double mass = 0.0;

  for (const WeightedSet& ws : d.support) {
    const double p = ws.probability;
    if (!std::isfinite(p)) {
      violation = std::numeric_limits<double>::infinity();
      continue;
    }
    violation = std::max(violation, -p);
    mass += p;
    if (ws.set.size() > instance.budget) {
      report.budget_ok = false;
      violation = std::max(violation,
                           static_cast<double>(ws.set.size() - instance.budget));
    }
    bool in_range = true;
    for (ItemId i : ws.set) in_range &= i >= 0 && i < instance.item_count;
    if (!in_range) {
      violation = std::numeric_limits<double>::infinity();
      continue;
    }
    for (int t = 0; t < m; ++t) {
      report.group_counts[t] += p * ws.set.CountIn(instance.groups[t].members);
    }
    report.value += p * objective.Evaluate(ws.set);
  }
  violation = std::max(violation, -d.residual);
  violation = std::max(violation, mass - 1.0);
  report.total_probability = mass + d.residual;
  violation = std::max(violation, std::abs(report.total_probability - 1.0));
  for (int t = 0; t < m; ++t) {
    violation = std::max(violation,
                         instance.groups[t].alpha - report.group_counts[t]);
    violation = std::max(violation,
                         report.group_counts[t] - instance.groups[t].beta);
  }
  report.max_violation = violation;
  report.feasible = violation <= kAuditTolerance;
  return report;
}

std::vector<ItemSet> Sample(const SelectionDistribution& d, uint64_t seed,
                            int count) {
  std::vector<double> cumulative;
  cumulative.reserve(d.support.size());
  double acc = 0.0;
  for (const WeightedSet& ws : d.support) {
    acc += ws.probability;
    cumulative.push_back(acc);
  }
  const double total = acc + d.residual;
  SplitMix64 rng(seed);
  std::vector<ItemSet> draws;
  draws.reserve(std::max(count, 0));
  for (int k = 0; k < count; ++k) {
    const double u = rng.Uniform() * total;
    const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    if (it == cumulative.end()) {
      draws.emplace_back();
    } else {
      draws.push_back(d.support[it - cumulative.begin()].set);
    }
  }
  return draws;
}

}  // namespace ltfair
