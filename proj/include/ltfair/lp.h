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

#ifndef LTFAIR_LP_H_
#define LTFAIR_LP_H_

#include <functional>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "ltfair/instance.h"
#include "ltfair/objectives.h"

namespace ltfair {

inline constexpr double kMembershipTolerance = 1e-9;

// B = {y in [0,1]^n : lower_t <= y(V_t) <= upper_t for all t,
//                     sum_t y(V_t) <= budget}.
struct FairnessPolytope {
  int item_count = 0;
  std::vector<std::vector<ItemId>> memberships;
  std::vector<double> group_lowers;
  std::vector<double> group_uppers;
  double budget = 0.0;

  static FairnessPolytope FromInstance(const Instance& instance);
};

// True iff every constraint of B holds within kMembershipTolerance.
bool Membership(std::span<const double> y, const FairnessPolytope& polytope);

// Receives human-readable warnings (negative weights clamped and so on).
using DiagnosticSink = std::function<void(const std::string&)>;

// Exact maximizer of <weights, y> over B for disjoint, covering groups.
//
// Items are ranked per group by weight (ties to the lower id). Each group
// first receives its mandatory mass lower_t on its best items; the remaining
// budget then goes, one unit of capacity at a time, to the globally best
// item with positive weight whose group is still below upper_t. The result
// is a vertex of B. Negative weights are treated as 0 and reported to
// `diagnostics`.
//
// Throws PreconditionError for overlapping or non-covering groups and
// EmptyPolytope when sum(lower) > budget or lower_t > min(upper_t, |V_t|).
FractionalPoint MaximizeOverB(std::span<const double> weights,
                              const FairnessPolytope& polytope,
                              const DiagnosticSink& diagnostics = {});

// Throws EmptyPolytope when the laminar structure admits no point.
void CheckPolytopeNonEmpty(const FairnessPolytope& polytope);

// ---------------------------------------------------------------------------
// Dense LP kernel.

enum class RowSense { kLessEqual, kGreaterEqual, kEqual };

struct LpRow {
  std::vector<double> coefficients;
  RowSense sense = RowSense::kLessEqual;
  double rhs = 0.0;
};

// maximize c.x subject to rows and lower <= x <= upper. Lower bounds must be
// finite; upper bounds may be +infinity.
struct LinearProgram {
  std::vector<double> objective;
  std::vector<LpRow> rows;
  std::vector<double> lower_bounds;  // empty means all zero
  std::vector<double> upper_bounds;  // empty means all +infinity

  int variable_count() const { return static_cast<int>(objective.size()); }
  void AddRow(std::vector<double> coefficients, RowSense sense, double rhs) {
    rows.push_back({std::move(coefficients), sense, rhs});
  }
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

std::string LpStatusName(LpStatus status);

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  std::vector<double> primal;
  double objective_value = 0.0;
  // One multiplier per LinearProgram::rows entry, with the sign convention of
  // the maximization Lagrangian: >= 0 on <= rows, <= 0 on >= rows.
  std::vector<double> row_duals;
  // Multipliers of finite upper bounds (0 where the bound is infinite).
  std::vector<double> upper_bound_duals;
};

// Two-phase dense tableau simplex with Bland's rule. Throws InvalidArgument
// on inconsistent dimensions or non-finite data.
LpSolution SolveSimplex(const LinearProgram& lp);

}  // namespace ltfair

#endif  // LTFAIR_LP_H_
