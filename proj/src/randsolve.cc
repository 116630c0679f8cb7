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

#include "ltfair/randsolve.h"

#include <Eigen/Cholesky>
#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "json.hpp"
#include "ltfair/errors.h"
#include "ltfair/lp.h"

namespace ltfair {

namespace {

using Json = nlohmann::ordered_json;

ItemSet FullSet(int n) {
  std::vector<ItemId> ids(n);
  for (int i = 0; i < n; ++i) ids[i] = i;
  return ItemSet(std::move(ids));
}

void CheckDualDims(std::span<const double> z, std::span<const double> u,
                   int m) {
  if (static_cast<int>(z.size()) != m || static_cast<int>(u.size()) != m) {
    throw InvalidArgument("dual weight vectors must have one entry per group");
  }
}

// Pooled primal: maximize sum x_S f(S) over the pool subject to the group
// rows and sum x <= 1. Returns the LP solution in pool order.
LpSolution SolvePool(const Instance& instance, const Objective& objective,
                     const std::vector<ItemSet>& pool) {
  const int k = static_cast<int>(pool.size());
  const int m = instance.group_count();
  LinearProgram lp;
  lp.objective.resize(k);
  std::vector<std::vector<double>> counts(m, std::vector<double>(k, 0.0));
  for (int s = 0; s < k; ++s) {
    lp.objective[s] = objective.Evaluate(pool[s]);
    for (int t = 0; t < m; ++t) {
      counts[t][s] = pool[s].CountIn(instance.groups[t].members);
    }
  }
  for (int t = 0; t < m; ++t) {
    lp.AddRow(counts[t], RowSense::kGreaterEqual, instance.groups[t].alpha);
    lp.AddRow(counts[t], RowSense::kLessEqual, instance.groups[t].beta);
  }
  lp.AddRow(std::vector<double>(k, 1.0), RowSense::kLessEqual, 1.0);
  return SolveSimplex(lp);
}

}  // namespace

std::string SubmaxModeName(SubmaxMode mode) {
  switch (mode) {
    case SubmaxMode::kExact:
      return "exact";
    case SubmaxMode::kHeuristic:
      return "heuristic";
    case SubmaxMode::kAuto:
      return "auto";
  }
  return "unknown";
}

std::vector<double> DualPoint::Flatten() const {
  std::vector<double> flat;
  flat.reserve(z.size() + u.size() + 1);
  flat.insert(flat.end(), z.begin(), z.end());
  flat.insert(flat.end(), u.begin(), u.end());
  flat.push_back(w);
  return flat;
}

DualPoint DualPoint::Unflatten(std::span<const double> flat, int group_count) {
  if (static_cast<int>(flat.size()) != 2 * group_count + 1) {
    throw InvalidArgument("flat dual point has the wrong dimension");
  }
  DualPoint p;
  p.z.assign(flat.begin(), flat.begin() + group_count);
  p.u.assign(flat.begin() + group_count, flat.begin() + 2 * group_count);
  p.w = flat.back();
  return p;
}

// ---------------------------------------------------------------------------
// SubMax

SubmaxSolver::SubmaxSolver(const Objective& objective, const Instance& instance,
                           SubmaxMode mode, uint64_t enumeration_budget)
    : objective_(objective), instance_(instance), mode_(mode) {
  if (objective.item_count() != instance.item_count) {
    throw InvalidArgument("objective and instance disagree on item count");
  }
  const int n = instance.item_count;
  const int b = instance.effective_budget();
  const uint64_t family = CountSubsetsUpTo(n, b, enumeration_budget);
  if (mode_ == SubmaxMode::kAuto) {
    mode_ = family <= enumeration_budget ? SubmaxMode::kExact
                                         : SubmaxMode::kHeuristic;
  }
  if (mode_ == SubmaxMode::kExact) {
    if (family > enumeration_budget) {
      throw EnumerationBudgetExceeded(
          "exact SubMax would enumerate more than " +
          std::to_string(enumeration_budget) +
          " sets; use the heuristic oracle or raise the budget");
    }
    sets_.reserve(family);
    values_.reserve(family);
    ForEachSubsetUpTo(n, b, [&](const ItemSet& s) {
      sets_.push_back(s);
      values_.push_back(objective_.Evaluate(s));
    });
  }
}

std::vector<double> SubmaxSolver::ItemWeights(std::span<const double> z,
                                              std::span<const double> u) const {
  CheckDualDims(z, u, instance_.group_count());
  std::vector<double> weight(instance_.item_count, 0.0);
  for (int t = 0; t < instance_.group_count(); ++t) {
    const double d = z[t] - u[t];
    for (ItemId i : instance_.groups[t].members) weight[i] += d;
  }
  return weight;
}

double SubmaxSolver::Score(const ItemSet& s, std::span<const double> z,
                           std::span<const double> u) const {
  CheckDualDims(z, u, instance_.group_count());
  double score = objective_.Evaluate(s);
  for (int t = 0; t < instance_.group_count(); ++t) {
    score += s.CountIn(instance_.groups[t].members) * (z[t] - u[t]);
  }
  return score;
}

SubmaxResult SubmaxSolver::Solve(std::span<const double> z,
                                 std::span<const double> u) const {
  const std::vector<double> weight = ItemWeights(z, u);
  return mode_ == SubmaxMode::kExact ? SolveExact(weight)
                                     : SolveHeuristic(weight);
}

SubmaxResult SubmaxSolver::SolveExact(
    const std::vector<double>& item_weight) const {
  size_t best = 0;
  double best_score = -std::numeric_limits<double>::infinity();
  for (size_t k = 0; k < sets_.size(); ++k) {
    double score = values_[k];
    for (ItemId i : sets_[k]) score += item_weight[i];
    if (score > best_score ||
        (score == best_score && sets_[k] < sets_[best])) {
      best_score = score;
      best = k;
    }
  }
  return {sets_[best], best_score};
}

SubmaxResult SubmaxSolver::SolveHeuristic(
    const std::vector<double>& item_weight) const {
  const int n = instance_.item_count;
  const int k = instance_.effective_budget();
  // g(S) = f(S) + sum_{i in S} max(c_i, 0);  cost_i = max(-c_i, 0).
  ItemSet chosen;
  for (int step = 0; step < k; ++step) {
    const double distortion = std::pow(1.0 - 1.0 / k, k - (step + 1));
    ItemId best = -1;
    double best_gain = 0.0;
    for (ItemId i = 0; i < n; ++i) {
      if (chosen.contains(i)) continue;
      const double g_gain =
          objective_.Marginal(i, chosen) + std::max(item_weight[i], 0.0);
      const double gain =
          distortion * g_gain - std::max(-item_weight[i], 0.0);
      if (gain > best_gain) {
        best_gain = gain;
        best = i;
      }
    }
    if (best == -1) continue;
    chosen.insert(best);
  }
  double score = objective_.Evaluate(chosen);
  for (ItemId i : chosen) score += item_weight[i];
  return {chosen, score};
}

SubmaxResult Submax(const Objective& objective, const Instance& instance,
                    std::span<const double> z, std::span<const double> u,
                    SubmaxMode mode, uint64_t enumeration_budget) {
  return SubmaxSolver(objective, instance, mode, enumeration_budget).Solve(z, u);
}

// ---------------------------------------------------------------------------
// Separation

double CutRow::Violation(std::span<const double> point) const {
  double lhs = 0.0;
  for (size_t k = 0; k < coefficients.size(); ++k) {
    lhs += coefficients[k] * point[k];
  }
  return lhs - rhs;
}

std::vector<double> DefaultDualBox(const Instance& instance,
                                   double full_value) {
  const int m = instance.group_count();
  const double weight_cap = full_value + 1.0;
  std::vector<double> box(2 * m + 1, weight_cap);
  box.back() = full_value + static_cast<double>(instance.effective_budget()) *
                                m * weight_cap;
  return box;
}

DualSeparator::DualSeparator(const Instance& instance,
                             const Objective& objective,
                             const EllipsoidConfig& cfg)
    : instance_(instance),
      objective_(objective),
      cut_tolerance_(cfg.cut_tolerance),
      full_value_(objective.Evaluate(FullSet(instance.item_count))),
      box_(cfg.box.empty() ? DefaultDualBox(instance, full_value_) : cfg.box),
      submax_(objective, instance, cfg.oracle_mode, cfg.enumeration_budget) {
  if (static_cast<int>(box_.size()) != 2 * instance.group_count() + 1) {
    throw InvalidArgument("dual box must have 2m+1 entries");
  }
  for (double v : box_) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw InvalidArgument("dual box bounds must be positive and finite");
    }
  }
}

SeparationOutcome DualSeparator::Separate(const DualPoint& point,
                                          double L) const {
  return Separate(point.Flatten(), L);
}

SeparationOutcome DualSeparator::Separate(std::span<const double> flat,
                                          double L) const {
  const int m = instance_.group_count();
  const int d = 2 * m + 1;
  if (static_cast<int>(flat.size()) != d) {
    throw InvalidArgument("dual point has the wrong dimension");
  }
  SeparationOutcome out;
  out.verdict = Verdict::kCut;

  // Box rows: -x_k <= 0 and x_k <= box_k.
  for (int k = 0; k < d; ++k) {
    if (-flat[k] > cut_tolerance_) {
      out.cut.coefficients.assign(d, 0.0);
      out.cut.coefficients[k] = -1.0;
      out.cut.rhs = 0.0;
      return out;
    }
    if (flat[k] - box_[k] > cut_tolerance_) {
      out.cut.coefficients.assign(d, 0.0);
      out.cut.coefficients[k] = 1.0;
      out.cut.rhs = box_[k];
      return out;
    }
  }

  // Objective row: sum_t (beta_t u_t - alpha_t z_t) + w <= L.
  CutRow objective_row;
  objective_row.coefficients.assign(d, 0.0);
  for (int t = 0; t < m; ++t) {
    objective_row.coefficients[t] = -instance_.groups[t].alpha;
    objective_row.coefficients[m + t] = instance_.groups[t].beta;
  }
  objective_row.coefficients[2 * m] = 1.0;
  objective_row.rhs = L;
  if (objective_row.Violation(flat) > cut_tolerance_) {
    out.cut = std::move(objective_row);
    return out;
  }

  // SubMax row: w >= f(A) + sum_t |A ∩ V_t| (z_t - u_t).
  const std::span<const double> z = flat.subspan(0, m);
  const std::span<const double> u = flat.subspan(m, m);
  const double w = flat[2 * m];
  const SubmaxResult best = submax_.Solve(z, u);
  if (best.score > w + cut_tolerance_) {
    out.cut.coefficients.assign(d, 0.0);
    for (int t = 0; t < m; ++t) {
      const double count = best.set.CountIn(instance_.groups[t].members);
      out.cut.coefficients[t] = count;
      out.cut.coefficients[m + t] = -count;
    }
    out.cut.coefficients[2 * m] = -1.0;
    out.cut.rhs = -objective_.Evaluate(best.set);
    out.witness = best.set;
    return out;
  }

  out.verdict = Verdict::kInside;
  out.cut = {};
  return out;
}

SeparationOutcome Separate(const DualPoint& point, double L,
                           const Instance& instance, const Objective& objective,
                           const EllipsoidConfig& cfg) {
  return DualSeparator(instance, objective, cfg).Separate(point, L);
}

// ---------------------------------------------------------------------------
// Ellipsoid

EllipsoidResult EllipsoidEmptiness(double L, const DualSeparator& separator,
                                   const EllipsoidConfig& cfg) {
  const std::vector<double>& box = separator.box();
  const int d = static_cast<int>(box.size());
  const int m = (d - 1) / 2;

  Eigen::VectorXd center(d);
  double radius_sq = 0.0;
  for (int k = 0; k < d; ++k) {
    center[k] = 0.5 * box[k];
    radius_sq += center[k] * center[k];
  }
  const double radius = std::sqrt(radius_sq);
  int max_iters = cfg.max_iters;
  if (max_iters <= 0) {
    const double r = cfg.cut_tolerance > 0.0 ? cfg.cut_tolerance : 1e-7;
    max_iters = static_cast<int>(std::ceil(
        2.0 * d * (d + 1) * std::log(std::max(radius / r, 2.0))));
  }
  Eigen::MatrixXd shape =
      Eigen::MatrixXd::Identity(d, d) * radius_sq;  // E = {x : (x-c)' P^-1 (x-c) <= 1}
  const double dd = static_cast<double>(d);
  const double expand = dd * dd / (dd * dd - 1.0);

  EllipsoidResult result;
  std::set<ItemSet> seen;
  std::vector<double> flat(d);
  for (int it = 0; it < max_iters; ++it) {
    for (int k = 0; k < d; ++k) flat[k] = center[k];
    const SeparationOutcome outcome = separator.Separate(flat, L);
    result.iterations = it + 1;
    if (outcome.verdict == Verdict::kInside) {
      result.empty = false;
      result.feasible_point = DualPoint::Unflatten(flat, m);
      return result;
    }
    if (outcome.witness && seen.insert(*outcome.witness).second) {
      result.violated.push_back(*outcome.witness);
    }
    const Eigen::Map<const Eigen::VectorXd> a(outcome.cut.coefficients.data(),
                                              d);
    Eigen::VectorXd pa = shape * a;
    double apa = a.dot(pa);
    if (!(apa > 0.0) || !std::isfinite(apa)) {
      shape = Eigen::MatrixXd::Identity(d, d) * radius_sq;
      ++result.reinitializations;
      pa = shape * a;
      apa = a.dot(pa);
    }
    const Eigen::VectorXd g = pa / std::sqrt(apa);
    center -= g / (dd + 1.0);
    shape = expand * (shape - (2.0 / (dd + 1.0)) * g * g.transpose());
    shape = 0.5 * (shape + shape.transpose());
    if (Eigen::LLT<Eigen::MatrixXd>(shape).info() != Eigen::Success) {
      shape = Eigen::MatrixXd::Identity(d, d) * radius_sq;
      ++result.reinitializations;
    }
  }
  result.empty = true;
  return result;
}

EllipsoidResult EllipsoidEmptiness(double L, const Instance& instance,
                                   const Objective& objective,
                                   const EllipsoidConfig& cfg) {
  const DualSeparator separator(instance, objective, cfg);
  return EllipsoidEmptiness(L, separator, cfg);
}

// ---------------------------------------------------------------------------
// End-to-end

RandomizedResult SolveRandomized(const Instance& instance,
                                 const Objective& objective,
                                 const EllipsoidConfig& cfg) {
  if (!Validate(instance).lp_feasible) {
    throw InfeasibleInstance(
        "no distribution over sets of size <= budget meets the group bounds");
  }
  const DualSeparator separator(instance, objective, cfg);
  const double full_value = separator.full_value();
  const double eps =
      cfg.epsilon_L > 0.0 ? cfg.epsilon_L : std::max(1e-4 * full_value, 1e-9);
  const int m = instance.group_count();

  RandomizedReport report;
  report.epsilon_L = eps;
  report.mode = separator.mode();

  std::set<ItemSet> pool_set = {ItemSet{}};
  auto probe = [&](double L) {
    const EllipsoidResult r = EllipsoidEmptiness(L, separator, cfg);
    ++report.probes;
    report.total_iterations += r.iterations;
    report.reinitializations += r.reinitializations;
    pool_set.insert(r.violated.begin(), r.violated.end());
    if (cfg.trace) {
      cfg.trace(Json{{"event", "ellipsoid_probe"},
                     {"L", L},
                     {"empty", r.empty},
                     {"iterations", r.iterations},
                     {"witnesses", r.violated.size()}}
                    .dump());
    }
    return r;
  };

  // (0, 0, f(V)) is feasible with objective f(V), so hi starts non-empty.
  double lo = 0.0;
  double hi = full_value;
  bool lo_probed = false;
  DualPoint best;
  best.z.assign(m, 0.0);
  best.u.assign(m, 0.0);
  best.w = full_value;
  while (hi - lo > eps) {
    const double mid = 0.5 * (lo + hi);
    const EllipsoidResult r = probe(mid);
    if (r.empty) {
      lo = mid;
      lo_probed = true;
    } else {
      hi = mid;
      best = *r.feasible_point;
    }
  }
  report.L_star = hi;
  report.final_dual = best;

  // The pool must hold the witnesses of an empty run just below L*.
  if (!lo_probed) probe(hi - eps);

  std::vector<ItemSet> pool(pool_set.begin(), pool_set.end());
  std::stable_sort(pool.begin(), pool.end(),
                   [](const ItemSet& a, const ItemSet& b) {
                     return a.size() < b.size() ||
                            (a.size() == b.size() && a < b);
                   });
  const LpSolution lp = SolvePool(instance, objective, pool);
  if (lp.status != LpStatus::kOptimal) {
    throw InfeasibleInstance("the pooled LP over " +
                             std::to_string(pool.size()) +
                             " witness sets is " + LpStatusName(lp.status));
  }

  RandomizedResult result;
  double mass = 0.0;
  for (size_t k = 0; k < pool.size(); ++k) {
    const double p = lp.primal[k];
    if (pool[k].empty() || p <= 1e-12) continue;
    result.distribution.support.push_back({pool[k], p});
    mass += p;
  }
  result.distribution.residual = std::max(0.0, 1.0 - mass);

  double value = 0.0;
  for (const WeightedSet& ws : result.distribution.support) {
    value += ws.probability * objective.Evaluate(ws.set);
  }
  report.value = value;
  if (report.mode == SubmaxMode::kExact) {
    report.certificate = "exact-lp";
    report.opt_upper_bound = report.L_star;
  } else {
    report.certificate = "one-minus-inv-e";
    report.opt_upper_bound = report.L_star / kOneMinusInvE;
  }
  report.pool = std::move(pool);
  result.report = std::move(report);
  return result;
}

}  // namespace ltfair
