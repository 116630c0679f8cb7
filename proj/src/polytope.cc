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

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ltfair/errors.h"
#include "ltfair/lp.h"

namespace ltfair {

namespace {

constexpr double kMassEpsilon = 1e-12;

// group_of[i] for disjoint covering groups; throws otherwise.
std::vector<int> GroupOfItem(const FairnessPolytope& polytope) {
  std::vector<int> group_of(polytope.item_count, -1);
  for (size_t t = 0; t < polytope.memberships.size(); ++t) {
    for (ItemId i : polytope.memberships[t]) {
      if (i < 0 || i >= polytope.item_count) {
        throw InvalidArgument("polytope member " + std::to_string(i) +
                              " out of range");
      }
      if (group_of[i] != -1) {
        throw PreconditionError("item " + std::to_string(i) +
                                " belongs to more than one group; the "
                                "laminar solver needs disjoint groups");
      }
      group_of[i] = static_cast<int>(t);
    }
  }
  for (int i = 0; i < polytope.item_count; ++i) {
    if (group_of[i] == -1) {
      throw PreconditionError("item " + std::to_string(i) +
                              " belongs to no group; the laminar solver "
                              "needs covering groups");
    }
  }
  return group_of;
}

}  // namespace

FairnessPolytope FairnessPolytope::FromInstance(const Instance& instance) {
  FairnessPolytope p;
  p.item_count = instance.item_count;
  p.budget = instance.budget;
  for (const GroupSpec& g : instance.groups) {
    p.memberships.push_back(g.members);
    p.group_lowers.push_back(g.alpha);
    p.group_uppers.push_back(g.beta);
  }
  return p;
}

bool Membership(std::span<const double> y, const FairnessPolytope& polytope) {
  constexpr double tol = kMembershipTolerance;
  if (static_cast<int>(y.size()) != polytope.item_count) return false;
  for (double v : y) {
    if (!(v >= -tol && v <= 1.0 + tol)) return false;
  }
  double total = 0.0;
  for (size_t t = 0; t < polytope.memberships.size(); ++t) {
    double sum = 0.0;
    for (ItemId i : polytope.memberships[t]) {
      if (i < 0 || i >= polytope.item_count) return false;
      sum += y[i];
    }
    if (sum < polytope.group_lowers[t] - tol) return false;
    if (sum > polytope.group_uppers[t] + tol) return false;
    total += sum;
  }
  return total <= polytope.budget + tol;
}

void CheckPolytopeNonEmpty(const FairnessPolytope& polytope) {
  double mandatory = 0.0;
  for (size_t t = 0; t < polytope.memberships.size(); ++t) {
    const double lower = polytope.group_lowers[t];
    const double size = static_cast<double>(polytope.memberships[t].size());
    if (lower > std::min(polytope.group_uppers[t], size) + kMembershipTolerance) {
      throw EmptyPolytope("group " + std::to_string(t) + " lower bound " +
                          std::to_string(lower) +
                          " exceeds min(upper bound, group size)");
    }
    mandatory += lower;
  }
  if (mandatory > polytope.budget + kMembershipTolerance) {
    throw EmptyPolytope("sum of group lower bounds " +
                        std::to_string(mandatory) + " exceeds budget " +
                        std::to_string(polytope.budget));
  }
}

FractionalPoint MaximizeOverB(std::span<const double> weights,
                              const FairnessPolytope& polytope,
                              const DiagnosticSink& diagnostics) {
  const int n = polytope.item_count;
  if (static_cast<int>(weights.size()) != n) {
    throw InvalidArgument("weight vector has " +
                          std::to_string(weights.size()) + " entries, expected " +
                          std::to_string(n));
  }
  GroupOfItem(polytope);
  CheckPolytopeNonEmpty(polytope);

  std::vector<double> w(weights.begin(), weights.end());
  int clamped = 0;
  for (double& v : w) {
    if (!std::isfinite(v)) throw InvalidArgument("non-finite weight");
    if (v < 0.0) {
      v = 0.0;
      ++clamped;
    }
  }
  if (clamped > 0 && diagnostics) {
    diagnostics("clamped " + std::to_string(clamped) +
                " negative weight(s) to 0 before maximizing over B");
  }

  const int m = static_cast<int>(polytope.memberships.size());
  std::vector<std::vector<ItemId>> ranked(m);
  for (int t = 0; t < m; ++t) {
    ranked[t] = polytope.memberships[t];
    std::stable_sort(ranked[t].begin(), ranked[t].end(),
                     [&](ItemId a, ItemId b) {
                       return w[a] > w[b] || (w[a] == w[b] && a < b);
                     });
  }

  FractionalPoint y(n, 0.0);
  std::vector<double> group_mass(m, 0.0);
  std::vector<size_t> head(m, 0);  // first item of ranked[t] with y < 1
  double spent = 0.0;

  // Mandatory mass.
  for (int t = 0; t < m; ++t) {
    double remaining = polytope.group_lowers[t];
    while (remaining > kMassEpsilon && head[t] < ranked[t].size()) {
      const ItemId i = ranked[t][head[t]];
      const double amount = std::min(1.0, remaining);
      y[i] = amount;
      remaining -= amount;
      group_mass[t] += amount;
      if (y[i] >= 1.0) ++head[t];
    }
    spent += group_mass[t];
  }

  // Optional mass, greedily by weight.
  double budget_left = polytope.budget - spent;
  while (budget_left > kMassEpsilon) {
    int best_group = -1;
    for (int t = 0; t < m; ++t) {
      if (head[t] >= ranked[t].size()) continue;
      if (polytope.group_uppers[t] - group_mass[t] <= kMassEpsilon) continue;
      const ItemId i = ranked[t][head[t]];
      if (w[i] <= 0.0) continue;
      if (best_group == -1) {
        best_group = t;
        continue;
      }
      const ItemId j = ranked[best_group][head[best_group]];
      if (w[i] > w[j] || (w[i] == w[j] && i < j)) best_group = t;
    }
    if (best_group == -1) break;
    const int t = best_group;
    const ItemId i = ranked[t][head[t]];
    const double amount =
        std::min({1.0 - y[i], polytope.group_uppers[t] - group_mass[t],
                  budget_left});
    y[i] += amount;
    group_mass[t] += amount;
    budget_left -= amount;
    if (y[i] >= 1.0 - kMassEpsilon) {
      y[i] = 1.0;
      ++head[t];
    }
  }
  return y;
}

}  // namespace ltfair
