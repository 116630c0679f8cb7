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

#include "ltfair/detsolve.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "json.hpp"
#include "ltfair/errors.h"

namespace ltfair {

namespace {

using Json = nlohmann::ordered_json;

constexpr double kSnap = 1e-9;

// Streams for the rounding estimates start far above the continuous-greedy
// iteration ordinals so the two never share draws.
constexpr uint64_t kRoundingStreamBase = uint64_t{1} << 40;

void SnapCoordinate(double& v) {
  if (v < kSnap) v = 0.0;
  if (v > 1.0 - kSnap) v = 1.0;
}

bool IsFractional(double v) { return v > 0.0 && v < 1.0; }

void Emit(const TraceSink& trace, const Json& event) {
  if (trace) trace(event.dump());
}

void RequireDisjoint(const Instance& instance) {
  std::vector<char> seen(instance.item_count, 0);
  for (const GroupSpec& g : instance.groups) {
    for (ItemId i : g.members) {
      if (seen[i]) {
        throw PreconditionError("item " + std::to_string(i) +
                                " belongs to more than one group; the "
                                "deterministic solvers need disjoint groups");
      }
      seen[i] = 1;
    }
  }
}

// Evaluates F on behalf of the rounding, one stream per evaluation.
class RoundingEvaluator {
 public:
  RoundingEvaluator(const Objective& objective, const EstimationConfig& base)
      : objective_(objective), cfg_(base) {
    cfg_.stream = base.stream + kRoundingStreamBase;
  }

  ExtensionEstimate operator()(std::span<const double> y) {
    ExtensionEstimate est = Extension(objective_, y, cfg_);
    ++cfg_.stream;
    return est;
  }

 private:
  const Objective& objective_;
  EstimationConfig cfg_;
};

// One pipage step on coordinates i < j of y.
void PipageStep(int phase, ItemId i, ItemId j, FractionalPoint& y,
                RoundingEvaluator& evaluate, std::vector<RoundingSwap>& trace,
                const TraceSink& sink) {
  const double theta_up = std::min(1.0 - y[i], y[j]);    // towards e_i - e_j
  const double theta_down = std::min(y[i], 1.0 - y[j]);  // towards e_j - e_i
  FractionalPoint ya = y;
  ya[i] += theta_up;
  ya[j] -= theta_up;
  FractionalPoint yb = y;
  yb[i] -= theta_down;
  yb[j] += theta_down;
  for (ItemId k : {i, j}) {
    SnapCoordinate(ya[k]);
    SnapCoordinate(yb[k]);
  }
  const ExtensionEstimate before = evaluate(y);
  const ExtensionEstimate fa = evaluate(ya);
  const ExtensionEstimate fb = evaluate(yb);
  RoundingSwap swap;
  swap.phase = phase;
  swap.i = i;
  swap.j = j;
  swap.before = before.value;
  swap.std_error = std::max({before.std_error, fa.std_error, fb.std_error});
  if (fa.value >= fb.value) {
    y = std::move(ya);
    swap.theta = theta_up;
    swap.after = fa.value;
  } else {
    y = std::move(yb);
    swap.theta = -theta_down;
    swap.after = fb.value;
  }
  trace.push_back(swap);
  Emit(sink, Json{{"event", "pipage_swap"},
                  {"phase", phase},
                  {"i", i},
                  {"j", j},
                  {"theta", swap.theta},
                  {"before", swap.before},
                  {"after", swap.after}});
}

// Rounds pairs among `candidates` until at most one fractional coordinate
// remains among them.
void PairwiseRound(int phase, const std::vector<ItemId>& candidates,
                   FractionalPoint& y, RoundingEvaluator& evaluate,
                   std::vector<RoundingSwap>& trace, const TraceSink& sink) {
  while (true) {
    ItemId first = -1;
    ItemId second = -1;
    for (ItemId k : candidates) {
      if (!IsFractional(y[k])) continue;
      if (first == -1) {
        first = k;
      } else {
        second = k;
        break;
      }
    }
    if (second == -1) return;
    PipageStep(phase, first, second, y, evaluate, trace, sink);
  }
}

}  // namespace

int ContinuousGreedyConfig::ResolvedDelta(int item_count) const {
  return delta > 0 ? delta : std::max(1, 9 * item_count * item_count);
}

double ContinuousGreedyConfig::ResolvedStep(int item_count) const {
  return step_scale > 0.0 ? step_scale : 1.0 / ResolvedDelta(item_count);
}

void RequireDisjointCovering(const Instance& instance) {
  RequireDisjoint(instance);
  std::vector<char> seen(instance.item_count, 0);
  for (const GroupSpec& g : instance.groups) {
    for (ItemId i : g.members) seen[i] = 1;
  }
  for (int i = 0; i < instance.item_count; ++i) {
    if (!seen[i]) {
      throw PreconditionError("item " + std::to_string(i) +
                              " belongs to no group; the deterministic "
                              "solvers need covering groups");
    }
  }
}

FractionalPoint ContinuousGreedy(const Instance& instance,
                                 const Objective& objective,
                                 const ContinuousGreedyConfig& cfg) {
  RequireDisjointCovering(instance);
  if (objective.item_count() != instance.item_count) {
    throw InvalidArgument("objective and instance disagree on item count");
  }
  const FairnessPolytope polytope = FairnessPolytope::FromInstance(instance);
  CheckPolytopeNonEmpty(polytope);

  const int n = instance.item_count;
  const int delta = cfg.ResolvedDelta(n);
  const double step = cfg.ResolvedStep(n);
  const double total = step * delta;
  if (total > 1.0 + 1e-12) {
    throw InvalidArgument("step_scale * delta = " + std::to_string(total) +
                          " exceeds 1; the iterate would leave B");
  }
  bool has_lower = false;
  for (const GroupSpec& g : instance.groups) has_lower |= g.alpha > 0.0;
  if (has_lower && total < 1.0 - 1e-12) {
    throw InvalidArgument("step_scale * delta = " + std::to_string(total) +
                          " is below 1; group lower bounds would be missed");
  }

  FractionalPoint y(n, 0.0);
  EstimationConfig est = cfg.estimation;
  for (int l = 0; l < delta; ++l) {
    est.stream = cfg.estimation.stream + static_cast<uint64_t>(l);
    const std::vector<ExtensionEstimate> marginals =
        ExtensionMarginals(objective, y, est);
    std::vector<double> weights(n);
    for (int i = 0; i < n; ++i) weights[i] = marginals[i].value;
    const FractionalPoint z = MaximizeOverB(weights, polytope, cfg.diagnostics);
    for (int i = 0; i < n; ++i) y[i] = std::clamp(y[i] + step * z[i], 0.0, 1.0);
    if (cfg.trace) {
      Json support = Json::array();
      for (int i = 0; i < n; ++i) {
        if (z[i] > 0.0) support.push_back(i);
      }
      Emit(cfg.trace, Json{{"event", "cg_iteration"},
                           {"iteration", l},
                           {"support", support},
                           {"F", Extension(objective, y, est).value}});
    }
  }
  for (double& v : y) SnapCoordinate(v);
  return y;
}

DeterministicSolution PipageRound(std::span<const double> y_in,
                                  const Instance& instance,
                                  const Objective& objective,
                                  const ContinuousGreedyConfig& cfg) {
  RequireDisjoint(instance);
  const FairnessPolytope polytope = FairnessPolytope::FromInstance(instance);
  if (!Membership(y_in, polytope)) {
    throw InvalidArgument("pipage rounding needs a point of B");
  }
  FractionalPoint y(y_in.begin(), y_in.end());
  for (double& v : y) {
    v = std::clamp(v, 0.0, 1.0);
    SnapCoordinate(v);
  }

  RoundingEvaluator evaluate(objective, cfg.estimation);
  DeterministicSolution out;

  for (const GroupSpec& g : instance.groups) {
    PairwiseRound(1, g.members, y, evaluate, out.trace, cfg.trace);
  }
  std::vector<ItemId> all(instance.item_count);
  for (int i = 0; i < instance.item_count; ++i) all[i] = i;
  PairwiseRound(2, all, y, evaluate, out.trace, cfg.trace);

  for (int i = 0; i < instance.item_count; ++i) {
    if (!IsFractional(y[i])) continue;
    RoundingSwap swap;
    swap.phase = 3;
    swap.i = i;
    swap.theta = 1.0 - y[i];
    const ExtensionEstimate before = evaluate(y);
    y[i] = 1.0;
    const ExtensionEstimate after = evaluate(y);
    swap.before = before.value;
    swap.after = after.value;
    swap.std_error = std::max(before.std_error, after.std_error);
    out.trace.push_back(swap);
    Emit(cfg.trace, Json{{"event", "pipage_raise"},
                         {"phase", 3},
                         {"i", i},
                         {"theta", swap.theta},
                         {"before", swap.before},
                         {"after", swap.after}});
    break;  // at most one fractional coordinate survives phase 2
  }

  std::vector<ItemId> chosen;
  for (int i = 0; i < instance.item_count; ++i) {
    if (y[i] == 1.0) chosen.push_back(i);
  }
  out.set = ItemSet(std::move(chosen));
  out.value = objective.Evaluate(out.set);
  out.fractional_value = std::numeric_limits<double>::quiet_NaN();
  return out;
}

DeterministicSolution SolveDeterministic(const Instance& instance,
                                         const Objective& objective,
                                         const ContinuousGreedyConfig& cfg) {
  const FractionalPoint y = ContinuousGreedy(instance, objective, cfg);
  EstimationConfig est = cfg.estimation;
  est.stream = cfg.estimation.stream + (uint64_t{1} << 39);
  const ExtensionEstimate fractional = Extension(objective, y, est);
  DeterministicSolution out = PipageRound(y, instance, objective, cfg);
  out.fractional_value = fractional.value;
  out.fractional_std_error = fractional.std_error;
  return out;
}

bool MatroidIndependent(const ItemSet& s, const Instance& instance) {
  long long weighted = 0;
  for (const GroupSpec& g : instance.groups) {
    const int count = s.CountIn(g.members);
    if (count > CeilBound(g.beta)) return false;
    weighted += std::max(FloorBound(g.alpha), count);
  }
  return weighted <= instance.budget;
}

void RequireRoundedRelaxationFeasible(const Instance& instance) {
  long long floors = 0;
  for (const GroupSpec& g : instance.groups) {
    const int lo = FloorBound(g.alpha);
    const int hi = CeilBound(g.beta);
    if (lo > static_cast<int>(g.members.size())) {
      throw InfeasibleRelaxation("group '" + g.name + "' needs " +
                                 std::to_string(lo) + " items but has " +
                                 std::to_string(g.members.size()));
    }
    if (lo > hi) {
      throw InfeasibleRelaxation("group '" + g.name +
                                 "' has floor(alpha) > ceil(beta)");
    }
    floors += lo;
  }
  if (floors > instance.budget) {
    throw InfeasibleRelaxation("sum of floor(alpha) = " +
                               std::to_string(floors) + " exceeds budget " +
                               std::to_string(instance.budget));
  }
}

DeterministicSolution FastGreedy(const Instance& instance,
                                 const Objective& objective) {
  RequireDisjointCovering(instance);
  RequireRoundedRelaxationFeasible(instance);
  if (objective.item_count() != instance.item_count) {
    throw InvalidArgument("objective and instance disagree on item count");
  }
  ItemSet chosen;
  while (true) {
    ItemId best = -1;
    double best_gain = -std::numeric_limits<double>::infinity();
    for (ItemId i = 0; i < instance.item_count; ++i) {
      if (chosen.contains(i)) continue;
      if (!MatroidIndependent(chosen.With(i), instance)) continue;
      const double gain = objective.Marginal(i, chosen);
      if (gain > best_gain) {
        best_gain = gain;
        best = i;
      }
    }
    if (best == -1) break;
    chosen.insert(best);
  }
  DeterministicSolution out;
  out.set = chosen;
  out.value = objective.Evaluate(chosen);
  out.fractional_value = std::numeric_limits<double>::quiet_NaN();
  return out;
}

}  // namespace ltfair
