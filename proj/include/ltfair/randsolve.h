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

// Strictly feasible randomized solver.
//
// The expected-utility LP over all budget-feasible sets has one variable per
// set but only 2m+1 rows, so its dual has 2m+1 variables (z, u, w) and one
// constraint per set:
//
//   min  sum_t (beta_t u_t - alpha_t z_t) + w
//   s.t. w >= f(S) + sum_t |S ∩ V_t| (z_t - u_t)   for all |S| <= b,
//        z, u, w >= 0.
//
// A central-cut ellipsoid decides whether the dual region with objective at
// most L is empty, using SubMax (maximize the right-hand side over S) as the
// separation oracle. A binary search finds the smallest non-empty L; the sets
// returned by the oracle along the way form a small column pool over which
// the primal LP is solved exactly.

#ifndef LTFAIR_RANDSOLVE_H_
#define LTFAIR_RANDSOLVE_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ltfair/detsolve.h"
#include "ltfair/distribution.h"
#include "ltfair/instance.h"
#include "ltfair/objectives.h"

namespace ltfair {

inline constexpr double kOneMinusInvE = 0.63212055882855767;

enum class SubmaxMode { kExact, kHeuristic, kAuto };

std::string SubmaxModeName(SubmaxMode mode);

struct DualPoint {
  std::vector<double> z;
  std::vector<double> u;
  double w = 0.0;

  // Packs as (z_0..z_{m-1}, u_0..u_{m-1}, w).
  std::vector<double> Flatten() const;
  static DualPoint Unflatten(std::span<const double> flat, int group_count);
};

struct SubmaxResult {
  ItemSet set;
  double score = 0.0;
};

// Maximizes f(S) + sum_t |S ∩ V_t| (z_t - u_t) over |S| <= b.
//
// Exact mode enumerates every set once at construction and caches f(S) and
// the group counts, so each query is a scan. Heuristic mode runs the
// distorted greedy for a submodular-plus-modular objective: positive modular
// weight is folded into the submodular part, negative weight is a cost. The
// returned score is always evaluated exactly. Auto picks exact when the
// enumeration fits the budget.
class SubmaxSolver {
 public:
  // Throws EnumerationBudgetExceeded in exact mode when the family of sets
  // with at most b items is larger than `enumeration_budget`.
  SubmaxSolver(const Objective& objective, const Instance& instance,
               SubmaxMode mode, uint64_t enumeration_budget = 1'000'000);

  SubmaxResult Solve(std::span<const double> z, std::span<const double> u) const;

  // kExact or kHeuristic after resolving kAuto.
  SubmaxMode mode() const { return mode_; }

  double Score(const ItemSet& s, std::span<const double> z,
               std::span<const double> u) const;

 private:
  SubmaxResult SolveExact(const std::vector<double>& item_weight) const;
  SubmaxResult SolveHeuristic(const std::vector<double>& item_weight) const;
  std::vector<double> ItemWeights(std::span<const double> z,
                                  std::span<const double> u) const;

  const Objective& objective_;
  const Instance& instance_;
  SubmaxMode mode_;
  // Exact-mode cache.
  std::vector<ItemSet> sets_;
  std::vector<double> values_;
};

// One-shot convenience wrapper around SubmaxSolver.
SubmaxResult Submax(const Objective& objective, const Instance& instance,
                    std::span<const double> z, std::span<const double> u,
                    SubmaxMode mode, uint64_t enumeration_budget = 1'000'000);

struct EllipsoidConfig {
  double epsilon_L = 0.0;      // <= 0 means 1e-4 f(V) (at least 1e-9)
  double cut_tolerance = 1e-7;
  int max_iters = 0;           // <= 0 means ceil(2d(d+1) ln(R/r))
  std::vector<double> box;     // per-variable upper bounds; empty: default
  SubmaxMode oracle_mode = SubmaxMode::kAuto;
  uint64_t enumeration_budget = 1'000'000;
  TraceSink trace;
};

// Linear inequality coefficients . (z, u, w) <= rhs.
struct CutRow {
  std::vector<double> coefficients;
  double rhs = 0.0;

  double Violation(std::span<const double> point) const;
};

enum class Verdict { kInside, kCut };

struct SeparationOutcome {
  Verdict verdict = Verdict::kInside;
  CutRow cut;                      // set when verdict == kCut
  std::optional<ItemSet> witness;  // set when the cut came from SubMax
};

// Separation oracle for the dual region with objective at most L.
class DualSeparator {
 public:
  DualSeparator(const Instance& instance, const Objective& objective,
                const EllipsoidConfig& cfg);

  // Checks box rows, then the objective row, then SubMax.
  SeparationOutcome Separate(const DualPoint& point, double L) const;
  SeparationOutcome Separate(std::span<const double> flat, double L) const;

  const std::vector<double>& box() const { return box_; }
  double full_value() const { return full_value_; }
  SubmaxMode mode() const { return submax_.mode(); }
  const SubmaxSolver& submax() const { return submax_; }

 private:
  const Instance& instance_;
  const Objective& objective_;
  double cut_tolerance_;
  double full_value_;  // f(V)
  std::vector<double> box_;
  SubmaxSolver submax_;
};

// Default search box: z_t, u_t <= f(V)+1 and w <= f(V) + b m (f(V)+1).
std::vector<double> DefaultDualBox(const Instance& instance,
                                   double full_value);

SeparationOutcome Separate(const DualPoint& point, double L,
                           const Instance& instance, const Objective& objective,
                           const EllipsoidConfig& cfg = {});

struct EllipsoidResult {
  bool empty = true;
  std::optional<DualPoint> feasible_point;
  std::vector<ItemSet> violated;  // distinct SubMax witnesses, first-seen order
  int iterations = 0;
  int reinitializations = 0;
};

// Central-cut ellipsoid over the 2m+1 dual variables, started from the ball
// circumscribing the search box. Reports empty after max_iters cuts without
// a feasible center.
EllipsoidResult EllipsoidEmptiness(double L, const DualSeparator& separator,
                                   const EllipsoidConfig& cfg);
EllipsoidResult EllipsoidEmptiness(double L, const Instance& instance,
                                   const Objective& objective,
                                   const EllipsoidConfig& cfg = {});

struct RandomizedReport {
  double value = 0.0;   // expected utility of the returned distribution
  double L_star = 0.0;  // smallest L found non-empty
  double epsilon_L = 0.0;
  SubmaxMode mode = SubmaxMode::kExact;
  // "exact-lp": value >= OPT - epsilon_L up to ellipsoid precision.
  // "one-minus-inv-e": value >= (1-1/e) OPT - epsilon_L, reported for the
  // heuristic oracle but not certified.
  std::string certificate;
  // Upper bound on OPT implied by L_star: L_star, or L_star / (1-1/e) with
  // the heuristic oracle.
  double opt_upper_bound = 0.0;
  DualPoint final_dual;          // feasible center found at L_star
  std::vector<ItemSet> pool;     // F' including the empty set
  int probes = 0;
  int total_iterations = 0;
  int reinitializations = 0;
};

struct RandomizedResult {
  SelectionDistribution distribution;
  RandomizedReport report;
};

// Throws InfeasibleInstance when no feasible distribution exists (checked
// up front) or the pooled LP is infeasible; EnumerationBudgetExceeded from
// exact SubMax.
RandomizedResult SolveRandomized(const Instance& instance,
                                 const Objective& objective,
                                 const EllipsoidConfig& cfg = {});

}  // namespace ltfair

#endif  // LTFAIR_RANDSOLVE_H_
