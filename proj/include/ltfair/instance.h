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

#ifndef LTFAIR_INSTANCE_H_
#define LTFAIR_INSTANCE_H_

#include <string>
#include <vector>

#include "ltfair/item_set.h"

namespace ltfair {

// One protected group V_t with bounds on its expected selected count.
struct GroupSpec {
  std::string name;
  std::vector<ItemId> members;  // sorted, unique
  double alpha = 0.0;           // lower bound on E|S ∩ V_t|
  double beta = 0.0;            // upper bound on E|S ∩ V_t|

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

// Ground set {0..item_count-1}, groups, and the hard cardinality budget.
// Instances are plain values; construct through MakeInstance or the loader
// to get the invariants checked.
struct Instance {
  int item_count = 0;
  std::vector<GroupSpec> groups;
  int budget = 0;
  // Optional display names, either empty or of size item_count.
  std::vector<std::string> item_names;

  int group_count() const { return static_cast<int>(groups.size()); }
  // min(budget, item_count): a budget above n is equivalent to n.
  int effective_budget() const {
    return budget < item_count ? budget : item_count;
  }

  friend bool operator==(const Instance&, const Instance&) = default;
};

struct StructureReport {
  bool disjoint = false;
  bool covering = false;
  bool lp_feasible = false;
  bool integral_bounds = false;

  friend bool operator==(const StructureReport&,
                         const StructureReport&) = default;
};

// Sorts and dedups group members, then checks invariants. Throws
// InvalidInstance.
Instance MakeInstance(int item_count, std::vector<GroupSpec> groups,
                      int budget, std::vector<std::string> item_names = {});

// Throws InvalidInstance when a member id is out of range, alpha > beta,
// alpha > |V_t|, a bound is negative or non-finite, or a group with a
// positive lower bound has no members. Overlap is reported, not rejected.
void CheckInstance(const Instance& instance);

// Structural flags. lp_feasible is decided by an exact LP solve over
// y in [0,1]^n with sum(y) <= b and alpha_t <= y(V_t) <= beta_t; this is
// equivalent to the existence of a feasible distribution because the budget
// polytope is integral.
StructureReport Validate(const Instance& instance);

// Bound rounding with a 1e-9 snap so that 2.0000000001 floors to 2.
int FloorBound(double value);
int CeilBound(double value);

// |S ∩ V_t| for every group, in group order.
std::vector<int> GroupCounts(const Instance& instance, const ItemSet& s);

}  // namespace ltfair

#endif  // LTFAIR_INSTANCE_H_
