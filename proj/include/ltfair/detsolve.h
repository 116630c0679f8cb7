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

// Deterministic, near-feasible solvers for disjoint covering groups:
// continuous greedy over the fairness polytope followed by pipage rounding,
// and the greedy algorithm over the rounded-bounds matroid.

#ifndef LTFAIR_DETSOLVE_H_
#define LTFAIR_DETSOLVE_H_

#include <functional>
#include <string>
#include <vector>

#include "ltfair/instance.h"
#include "ltfair/lp.h"
#include "ltfair/objectives.h"

namespace ltfair {

// Receives one JSON object (serialized, no trailing newline) per event.
using TraceSink = std::function<void(const std::string&)>;

struct ContinuousGreedyConfig {
  int delta = 0;            // iterations; <= 0 means 9 n^2
  double step_scale = 0.0;  // <= 0 means 1 / delta
  EstimationConfig estimation;
  TraceSink trace;
  DiagnosticSink diagnostics;

  int ResolvedDelta(int item_count) const;
  double ResolvedStep(int item_count) const;
};

struct RoundingSwap {
  int phase = 0;  // 1, 2 or 3
  ItemId i = -1;
  ItemId j = -1;  // -1 for phase 3
  double theta = 0.0;
  double before = 0.0;
  double after = 0.0;
  double std_error = 0.0;  // of the before/after estimates, 0 when exact
};

struct DeterministicSolution {
  ItemSet set;
  double value = 0.0;
  double fractional_value = 0.0;  // F(y') estimate, NaN for the greedy
  double fractional_std_error = 0.0;
  std::vector<RoundingSwap> trace;
};

// Throws PreconditionError unless groups are pairwise disjoint and cover the
// ground set.
void RequireDisjointCovering(const Instance& instance);

// Continuous greedy over B: y^{l+1} = y^l + step * argmax_{z in B}
// <F(.|y^l), z>, starting from 0. Returns y' in B.
FractionalPoint ContinuousGreedy(const Instance& instance,
                                 const Objective& objective,
                                 const ContinuousGreedyConfig& cfg = {});

// Three-phase pipage rounding of y in B: pairs inside each group, then pairs
// across the remaining fractional coordinates (lowest indices first), then
// the last fractional coordinate, if any, is raised to 1.
// Throws InvalidArgument when y is not in B, PreconditionError for
// overlapping groups.
DeterministicSolution PipageRound(std::span<const double> y,
                                  const Instance& instance,
                                  const Objective& objective,
                                  const ContinuousGreedyConfig& cfg = {});

// ContinuousGreedy followed by PipageRound.
DeterministicSolution SolveDeterministic(
    const Instance& instance, const Objective& objective,
    const ContinuousGreedyConfig& cfg = {});

// Independence in the rounded-bounds matroid:
//   |S ∩ V_t| <= ceil(beta_t) for all t and
//   sum_t max(floor(alpha_t), |S ∩ V_t|) <= b.
bool MatroidIndependent(const ItemSet& s, const Instance& instance);

// Throws InfeasibleRelaxation unless the rounded-bounds problem
// (floor(alpha_t) <= |S ∩ V_t| <= ceil(beta_t), |S| <= b) has a solution.
void RequireRoundedRelaxationFeasible(const Instance& instance);

// Greedy by largest marginal gain (ties to the lower id) over the
// rounded-bounds matroid until the set is maximal.
DeterministicSolution FastGreedy(const Instance& instance,
                                 const Objective& objective);

}  // namespace ltfair

#endif  // LTFAIR_DETSOLVE_H_
