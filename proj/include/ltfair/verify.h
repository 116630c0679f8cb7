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

#ifndef LTFAIR_VERIFY_H_
#define LTFAIR_VERIFY_H_

#include <cstdint>
#include <vector>

#include "ltfair/distribution.h"
#include "ltfair/instance.h"
#include "ltfair/objectives.h"

namespace ltfair {

inline constexpr double kAuditTolerance = 1e-6;

struct BruteForceResult {
  SelectionDistribution distribution;
  double optimum = 0.0;
};

// Solves the expected-utility LP over every set with at most b items
// (enumerated by size, then lexicographically). Throws
// EnumerationBudgetExceeded or InfeasibleInstance.
BruteForceResult BruteForceLp(const Instance& instance,
                              const Objective& objective,
                              uint64_t enumeration_budget = 1'000'000);

struct AuditReport {
  bool feasible = false;
  std::vector<double> group_counts;  // expected |S ∩ V_t|
  double total_probability = 0.0;    // support mass plus residual
  bool budget_ok = false;            // every support set has <= b items
  double max_violation = 0.0;
  double value = 0.0;                // expected utility
};

// Exact accounting of a distribution against the instance. Violations are
// reported, never thrown.
AuditReport AuditDistribution(const SelectionDistribution& d,
                              const Instance& instance,
                              const Objective& objective);

// i.i.d. draws by inverse CDF over the support order, the empty set (residual)
// last. Deterministic given the seed.
std::vector<ItemSet> Sample(const SelectionDistribution& d, uint64_t seed,
                            int count);

}  // namespace ltfair

#endif  // LTFAIR_VERIFY_H_
