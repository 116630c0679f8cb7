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

#include <cmath>
#include <limits>

#include "ltfair/errors.h"
#include "ltfair/lp.h"

namespace ltfair {

namespace {

constexpr double kPivotTolerance = 1e-9;
constexpr double kCostTolerance = 1e-9;
constexpr double kFeasibilityTolerance = 1e-9;

// Standard-form tableau: every row is an equality with a non-negative
// right-hand side. Columns are laid out as
//   [structural | slack/surplus | artificial], rhs kept separately.
// Artificial column k starts as the k-th unit vector, so at any point the
// artificial block holds B^{-1}.
class Tableau {
 public:
  Tableau(int rows, int structural, int slack)
      : rows_(rows),
        structural_(structural),
        slack_(slack),
        cols_(structural + slack + rows),
        a_(static_cast<size_t>(rows) * cols_, 0.0),
        rhs_(rows, 0.0),
        basis_(rows),
        reduced_(cols_, 0.0) {
    for (int r = 0; r < rows_; ++r) {
      at(r, artificial(r)) = 1.0;
      basis_[r] = artificial(r);
    }
  }

  double& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  double at(int r, int c) const {
    return a_[static_cast<size_t>(r) * cols_ + c];
  }
  double& rhs(int r) { return rhs_[r]; }
  double rhs(int r) const { return rhs_[r]; }
  int artificial(int r) const { return structural_ + slack_ + r; }
  bool is_artificial(int c) const { return c >= structural_ + slack_; }
  int cols() const { return cols_; }
  int rows() const { return rows_; }
  int basis(int r) const { return basis_[r]; }
  double reduced(int c) const { return reduced_[c]; }

  // Reduced costs d_j = c_j - c_B B^{-1} A_j for the given cost vector.
  void Price(const std::vector<double>& cost) {
    cost_ = cost;
    for (int c = 0; c < cols_; ++c) {
      double d = cost[c];
      for (int r = 0; r < rows_; ++r) d -= cost[basis_[r]] * at(r, c);
      reduced_[c] = d;
    }
  }

  void Pivot(int pr, int pc) {
    const double inv = 1.0 / at(pr, pc);
    for (int c = 0; c < cols_; ++c) at(pr, c) *= inv;
    rhs_[pr] *= inv;
    at(pr, pc) = 1.0;
    for (int r = 0; r < rows_; ++r) {
      if (r == pr) continue;
      const double factor = at(r, pc);
      if (factor == 0.0) continue;
      for (int c = 0; c < cols_; ++c) at(r, c) -= factor * at(pr, c);
      at(r, pc) = 0.0;
      rhs_[r] -= factor * rhs_[pr];
      if (rhs_[r] < 0.0 && rhs_[r] > -kFeasibilityTolerance) rhs_[r] = 0.0;
    }
    const double dfactor = reduced_[pc];
    if (dfactor != 0.0) {
      for (int c = 0; c < cols_; ++c) reduced_[c] -= dfactor * at(pr, c);
      reduced_[pc] = 0.0;
    }
    basis_[pr] = pc;
  }

  // Bland's rule: lowest-index improving column, lowest-index basic variable
  // among ratio-test ties. Returns false when unbounded.
  bool Optimize(bool allow_artificial_entering) {
    while (true) {
      int enter = -1;
      for (int c = 0; c < cols_; ++c) {
        if (!allow_artificial_entering && is_artificial(c)) continue;
        if (reduced_[c] > kCostTolerance) {
          enter = c;
          break;
        }
      }
      if (enter == -1) return true;
      int leave = -1;
      double best_ratio = std::numeric_limits<double>::infinity();
      for (int r = 0; r < rows_; ++r) {
        const double coef = at(r, enter);
        if (coef <= kPivotTolerance) continue;
        const double ratio = rhs_[r] / coef;
        if (ratio < best_ratio - 1e-12 ||
            (std::abs(ratio - best_ratio) <= 1e-12 && leave != -1 &&
             basis_[r] < basis_[leave])) {
          best_ratio = ratio;
          leave = r;
        }
      }
      if (leave == -1) return false;
      Pivot(leave, enter);
    }
  }

  std::vector<double> BasicValues() const {
    std::vector<double> x(cols_, 0.0);
    for (int r = 0; r < rows_; ++r) x[basis_[r]] = rhs_[r];
    return x;
  }

 private:
  int rows_;
  int structural_;
  int slack_;
  int cols_;
  std::vector<double> a_;
  std::vector<double> rhs_;
  std::vector<int> basis_;
  std::vector<double> reduced_;
  std::vector<double> cost_;
};

void CheckFinite(double v, const char* what) {
  if (!std::isfinite(v)) {
    throw InvalidArgument(std::string("non-finite ") + what + " in LP");
  }
}

}  // namespace

std::string LpStatusName(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal:
      return "optimal";
    case LpStatus::kInfeasible:
      return "infeasible";
    case LpStatus::kUnbounded:
      return "unbounded";
  }
  return "unknown";
}

LpSolution SolveSimplex(const LinearProgram& lp) {
  const int n = lp.variable_count();
  std::vector<double> lower =
      lp.lower_bounds.empty() ? std::vector<double>(n, 0.0) : lp.lower_bounds;
  std::vector<double> upper =
      lp.upper_bounds.empty()
          ? std::vector<double>(n, std::numeric_limits<double>::infinity())
          : lp.upper_bounds;
  if (static_cast<int>(lower.size()) != n ||
      static_cast<int>(upper.size()) != n) {
    throw InvalidArgument("variable bound vectors do not match objective size");
  }
  for (double c : lp.objective) CheckFinite(c, "objective coefficient");
  for (int j = 0; j < n; ++j) {
    CheckFinite(lower[j], "lower bound");
    if (std::isnan(upper[j])) throw InvalidArgument("NaN upper bound in LP");
  }
  for (const LpRow& row : lp.rows) {
    if (static_cast<int>(row.coefficients.size()) != n) {
      throw InvalidArgument("LP row has " +
                            std::to_string(row.coefficients.size()) +
                            " coefficients, expected " + std::to_string(n));
    }
    for (double a : row.coefficients) CheckFinite(a, "row coefficient");
    CheckFinite(row.rhs, "right-hand side");
  }

  LpSolution solution;
  for (int j = 0; j < n; ++j) {
    if (upper[j] < lower[j]) {
      solution.status = LpStatus::kInfeasible;
      return solution;
    }
  }

  // Shift x = lower + x' and append finite upper bounds as <= rows.
  struct StdRow {
    std::vector<double> coefficients;
    RowSense sense;
    double rhs;
  };
  std::vector<StdRow> rows;
  rows.reserve(lp.rows.size());
  for (const LpRow& row : lp.rows) {
    double rhs = row.rhs;
    for (int j = 0; j < n; ++j) rhs -= row.coefficients[j] * lower[j];
    rows.push_back({row.coefficients, row.sense, rhs});
  }
  std::vector<int> bound_row_of(n, -1);
  for (int j = 0; j < n; ++j) {
    if (std::isinf(upper[j])) continue;
    std::vector<double> coefficients(n, 0.0);
    coefficients[j] = 1.0;
    bound_row_of[j] = static_cast<int>(rows.size());
    rows.push_back({std::move(coefficients), RowSense::kLessEqual,
                    upper[j] - lower[j]});
  }

  const int m = static_cast<int>(rows.size());
  int slack_count = 0;
  std::vector<int> slack_of(m, -1);
  for (int r = 0; r < m; ++r) {
    if (rows[r].sense != RowSense::kEqual) slack_of[r] = slack_count++;
  }

  Tableau tab(m, n, slack_count);
  std::vector<double> row_sign(m, 1.0);
  for (int r = 0; r < m; ++r) {
    const double sign = rows[r].rhs < 0.0 ? -1.0 : 1.0;
    row_sign[r] = sign;
    for (int j = 0; j < n; ++j) tab.at(r, j) = sign * rows[r].coefficients[j];
    if (slack_of[r] >= 0) {
      const double s = rows[r].sense == RowSense::kLessEqual ? 1.0 : -1.0;
      tab.at(r, n + slack_of[r]) = sign * s;
    }
    tab.rhs(r) = sign * rows[r].rhs;
  }

  // Phase 1: maximize -sum(artificials).
  std::vector<double> cost(tab.cols(), 0.0);
  for (int r = 0; r < m; ++r) cost[tab.artificial(r)] = -1.0;
  tab.Price(cost);
  tab.Optimize(/*allow_artificial_entering=*/true);
  double infeasibility = 0.0;
  double scale = 1.0;
  for (int r = 0; r < m; ++r) {
    scale = std::max(scale, std::abs(rows[r].rhs));
    if (tab.is_artificial(tab.basis(r))) infeasibility += tab.rhs(r);
  }
  if (infeasibility > kFeasibilityTolerance * scale) {
    solution.status = LpStatus::kInfeasible;
    return solution;
  }
  // Drive zero-valued artificials out of the basis where possible; rows
  // where that fails are redundant and keep their artificial at zero.
  for (int r = 0; r < m; ++r) {
    if (!tab.is_artificial(tab.basis(r))) continue;
    for (int c = 0; c < n + slack_count; ++c) {
      if (std::abs(tab.at(r, c)) > kPivotTolerance) {
        tab.Pivot(r, c);
        break;
      }
    }
  }

  // Phase 2.
  std::fill(cost.begin(), cost.end(), 0.0);
  for (int j = 0; j < n; ++j) cost[j] = lp.objective[j];
  tab.Price(cost);
  if (!tab.Optimize(/*allow_artificial_entering=*/false)) {
    solution.status = LpStatus::kUnbounded;
    return solution;
  }

  const std::vector<double> values = tab.BasicValues();
  solution.status = LpStatus::kOptimal;
  solution.primal.resize(n);
  solution.objective_value = 0.0;
  for (int j = 0; j < n; ++j) {
    solution.primal[j] = lower[j] + values[j];
    solution.objective_value += lp.objective[j] * solution.primal[j];
  }
  // y_r = c_B B^{-1} e_r = -(reduced cost of artificial r), artificial cost 0.
  std::vector<double> duals(m);
  for (int r = 0; r < m; ++r) {
    duals[r] = -tab.reduced(tab.artificial(r)) * row_sign[r];
  }
  solution.row_duals.assign(duals.begin(), duals.begin() + lp.rows.size());
  solution.upper_bound_duals.assign(n, 0.0);
  for (int j = 0; j < n; ++j) {
    if (bound_row_of[j] >= 0) {
      solution.upper_bound_duals[j] = duals[bound_row_of[j]];
    }
  }
  return solution;
}

}  // namespace ltfair
