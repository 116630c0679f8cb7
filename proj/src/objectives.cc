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

#include "ltfair/objectives.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ltfair/errors.h"
#include "ltfair/random.h"

namespace ltfair {

namespace {

void CheckWeight(double w, const char* what) {
  if (!std::isfinite(w) || w < 0.0) {
    throw InvalidArgument(std::string(what) +
                          " must be finite and non-negative, got " +
                          std::to_string(w));
  }
}

void CheckPoint(const Objective& objective, std::span<const double> y) {
  if (static_cast<int>(y.size()) != objective.item_count()) {
    throw InvalidArgument("fractional point has " + std::to_string(y.size()) +
                          " coordinates, objective has " +
                          std::to_string(objective.item_count()) + " items");
  }
  for (size_t i = 0; i < y.size(); ++i) {
    if (!(y[i] >= 0.0 && y[i] <= 1.0)) {
      throw InvalidArgument("coordinate " + std::to_string(i) + " = " +
                            std::to_string(y[i]) + " is outside [0,1]");
    }
  }
}

bool UseExactPath(const Objective& objective, const EstimationConfig& cfg) {
  switch (cfg.method) {
    case ExtensionMethod::kExact:
      return true;
    case ExtensionMethod::kMonteCarlo:
      return false;
    case ExtensionMethod::kAuto:
      break;
  }
  return objective.item_count() <= cfg.exact_threshold;
}

// The set S when y is the indicator vector of S.
std::optional<ItemSet> IntegralSet(std::span<const double> y) {
  ItemSet s;
  for (size_t i = 0; i < y.size(); ++i) {
    if (y[i] == 1.0) {
      s.insert(static_cast<ItemId>(i));
    } else if (y[i] != 0.0) {
      return std::nullopt;
    }
  }
  return s;
}

// Closed form when available, otherwise enumeration. Caller decided that an
// exact answer is wanted.
double ExactExtension(const Objective& objective, std::span<const double> y) {
  if (auto closed = objective.ClosedFormExtension(y)) return *closed;
  return ExtensionByEnumeration(objective, y);
}

ItemSet DrawSet(std::span<const double> y, uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<ItemId> ids;
  for (size_t i = 0; i < y.size(); ++i) {
    // Always consume one draw per coordinate so the stream layout does not
    // depend on y.
    const double u = rng.Uniform();
    if (u < y[i]) ids.push_back(static_cast<ItemId>(i));
  }
  return ItemSet(std::move(ids));
}

struct Moments {
  double sum = 0.0;
  double sum_sq = 0.0;

  void Add(double v) {
    sum += v;
    sum_sq += v * v;
  }
  ExtensionEstimate Finish(int n) const {
    ExtensionEstimate est;
    est.exact = false;
    est.value = sum / n;
    if (n > 1) {
      const double var =
          std::max(0.0, (sum_sq - sum * sum / n) / (n - 1));
      est.std_error = std::sqrt(var / n);
    }
    return est;
  }
};

}  // namespace

std::string ObjectiveKindName(ObjectiveKind kind) {
  switch (kind) {
    case ObjectiveKind::kCoverage:
      return "coverage";
    case ObjectiveKind::kFacilityLocation:
      return "facility_location";
    case ObjectiveKind::kModular:
      return "modular";
    case ObjectiveKind::kCustom:
      return "custom";
  }
  return "unknown";
}

void Objective::CheckSet(const ItemSet& s) const {
  if (!s.empty() && (s.ids().front() < 0 || s.ids().back() >= item_count())) {
    throw InvalidArgument("item set " + s.ToString() +
                          " references an id outside [0, " +
                          std::to_string(item_count()) + ")");
  }
}

double Objective::Marginal(ItemId e, const ItemSet& s) const {
  if (s.contains(e)) {
    throw InvalidArgument("marginal of item " + std::to_string(e) +
                          " requested on a set that contains it");
  }
  return Evaluate(s.With(e)) - Evaluate(s);
}

std::optional<double> Objective::ClosedFormExtension(
    std::span<const double>) const {
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Coverage

CoverageObjective::CoverageObjective(std::vector<std::string> element_names,
                                     std::vector<double> weights,
                                     std::vector<std::vector<int>> covers)
    : element_names_(std::move(element_names)),
      weights_(std::move(weights)),
      covers_(std::move(covers)),
      covered_by_(weights_.size()) {
  if (element_names_.size() != weights_.size()) {
    throw InvalidArgument("coverage: element name/weight count mismatch");
  }
  for (double w : weights_) CheckWeight(w, "coverage element weight");
  for (size_t i = 0; i < covers_.size(); ++i) {
    auto& list = covers_[i];
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    for (int u : list) {
      if (u < 0 || u >= static_cast<int>(weights_.size())) {
        throw InvalidArgument("coverage: item " + std::to_string(i) +
                              " covers unknown element " + std::to_string(u));
      }
      covered_by_[u].push_back(static_cast<ItemId>(i));
    }
  }
}

double CoverageObjective::Evaluate(const ItemSet& s) const {
  CheckSet(s);
  std::vector<char> covered(weights_.size(), 0);
  double value = 0.0;
  for (ItemId i : s) {
    for (int u : covers_[i]) {
      if (!covered[u]) {
        covered[u] = 1;
        value += weights_[u];
      }
    }
  }
  return value;
}

double CoverageObjective::Marginal(ItemId e, const ItemSet& s) const {
  CheckSet(s);
  if (e < 0 || e >= item_count()) {
    throw InvalidArgument("item " + std::to_string(e) + " out of range");
  }
  if (s.contains(e)) {
    throw InvalidArgument("marginal of item " + std::to_string(e) +
                          " requested on a set that contains it");
  }
  double gain = 0.0;
  for (int u : covers_[e]) {
    bool already = false;
    for (ItemId j : covered_by_[u]) {
      if (s.contains(j)) {
        already = true;
        break;
      }
    }
    if (!already) gain += weights_[u];
  }
  return gain;
}

std::optional<double> CoverageObjective::ClosedFormExtension(
    std::span<const double> y) const {
  double value = 0.0;
  for (size_t u = 0; u < weights_.size(); ++u) {
    double miss = 1.0;
    for (ItemId i : covered_by_[u]) miss *= 1.0 - y[i];
    value += weights_[u] * (1.0 - miss);
  }
  return value;
}

// ---------------------------------------------------------------------------
// Facility location

FacilityLocationObjective::FacilityLocationObjective(
    std::vector<std::vector<double>> similarity)
    : similarity_(std::move(similarity)) {
  if (similarity_.empty()) {
    throw InvalidArgument("facility_location: similarity matrix has no rows");
  }
  item_count_ = static_cast<int>(similarity_.front().size());
  for (const auto& row : similarity_) {
    if (static_cast<int>(row.size()) != item_count_) {
      throw InvalidArgument("facility_location: ragged similarity matrix");
    }
    for (double v : row) CheckWeight(v, "similarity entry");
  }
}

double FacilityLocationObjective::Evaluate(const ItemSet& s) const {
  CheckSet(s);
  if (s.empty()) return 0.0;
  double value = 0.0;
  for (const auto& row : similarity_) {
    double best = 0.0;
    for (ItemId j : s) best = std::max(best, row[j]);
    value += best;
  }
  return value;
}

double FacilityLocationObjective::Marginal(ItemId e, const ItemSet& s) const {
  CheckSet(s);
  if (e < 0 || e >= item_count_) {
    throw InvalidArgument("item " + std::to_string(e) + " out of range");
  }
  if (s.contains(e)) {
    throw InvalidArgument("marginal of item " + std::to_string(e) +
                          " requested on a set that contains it");
  }
  double gain = 0.0;
  for (const auto& row : similarity_) {
    double best = 0.0;
    for (ItemId j : s) best = std::max(best, row[j]);
    gain += std::max(0.0, row[e] - best);
  }
  return gain;
}

std::optional<double> FacilityLocationObjective::ClosedFormExtension(
    std::span<const double> y) const {
  std::vector<int> order(item_count_);
  double value = 0.0;
  for (const auto& row : similarity_) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return row[a] > row[b]; });
    double none_better = 1.0;
    for (int j : order) {
      value += row[j] * y[j] * none_better;
      none_better *= 1.0 - y[j];
      if (none_better == 0.0) break;
    }
  }
  return value;
}

// ---------------------------------------------------------------------------
// Modular

ModularObjective::ModularObjective(std::vector<double> weights)
    : weights_(std::move(weights)) {
  for (double w : weights_) CheckWeight(w, "modular weight");
}

double ModularObjective::Evaluate(const ItemSet& s) const {
  CheckSet(s);
  double value = 0.0;
  for (ItemId i : s) value += weights_[i];
  return value;
}

double ModularObjective::Marginal(ItemId e, const ItemSet& s) const {
  CheckSet(s);
  if (e < 0 || e >= item_count()) {
    throw InvalidArgument("item " + std::to_string(e) + " out of range");
  }
  if (s.contains(e)) {
    throw InvalidArgument("marginal of item " + std::to_string(e) +
                          " requested on a set that contains it");
  }
  return weights_[e];
}

std::optional<double> ModularObjective::ClosedFormExtension(
    std::span<const double> y) const {
  double value = 0.0;
  for (size_t i = 0; i < weights_.size(); ++i) value += weights_[i] * y[i];
  return value;
}

// ---------------------------------------------------------------------------
// Multilinear extension

double ExtensionByEnumeration(const Objective& objective,
                              std::span<const double> y) {
  CheckPoint(objective, y);
  std::vector<ItemId> fixed;
  std::vector<ItemId> fractional;
  for (size_t i = 0; i < y.size(); ++i) {
    if (y[i] == 1.0) {
      fixed.push_back(static_cast<ItemId>(i));
    } else if (y[i] > 0.0) {
      fractional.push_back(static_cast<ItemId>(i));
    }
  }
  if (fractional.size() > 30) {
    throw InvalidArgument("enumeration over " +
                          std::to_string(fractional.size()) +
                          " fractional coordinates is not supported");
  }
  const uint64_t count = uint64_t{1} << fractional.size();
  double value = 0.0;
  for (uint64_t mask = 0; mask < count; ++mask) {
    double prob = 1.0;
    std::vector<ItemId> ids = fixed;
    for (size_t k = 0; k < fractional.size(); ++k) {
      const double p = y[fractional[k]];
      if (mask >> k & 1) {
        prob *= p;
        ids.push_back(fractional[k]);
      } else {
        prob *= 1.0 - p;
      }
    }
    if (prob == 0.0) continue;
    value += prob * objective.Evaluate(ItemSet(std::move(ids)));
  }
  return value;
}

ExtensionEstimate Extension(const Objective& objective,
                            std::span<const double> y,
                            const EstimationConfig& cfg) {
  CheckPoint(objective, y);
  if (auto s = IntegralSet(y)) return {objective.Evaluate(*s), true, 0.0};
  if (UseExactPath(objective, cfg) ||
      (cfg.method == ExtensionMethod::kAuto &&
       objective.ClosedFormExtension(y).has_value())) {
    return {ExactExtension(objective, y), true, 0.0};
  }
  if (cfg.samples < 1) throw InvalidArgument("samples must be positive");
  Moments m;
  for (int k = 0; k < cfg.samples; ++k) {
    m.Add(objective.Evaluate(DrawSet(y, DeriveSeed(cfg.seed, cfg.stream, k))));
  }
  return m.Finish(cfg.samples);
}

std::vector<ExtensionEstimate> ExtensionMarginals(
    const Objective& objective, std::span<const double> y,
    const EstimationConfig& cfg) {
  CheckPoint(objective, y);
  const int n = objective.item_count();
  std::vector<ExtensionEstimate> out(n);
  if (auto s = IntegralSet(y)) {
    for (int i = 0; i < n; ++i) {
      if (!s->contains(i)) out[i].value = objective.Marginal(i, *s);
    }
    return out;
  }
  const bool exact =
      UseExactPath(objective, cfg) ||
      (cfg.method == ExtensionMethod::kAuto &&
       objective.ClosedFormExtension(y).has_value());
  if (exact) {
    const double base = ExactExtension(objective, y);
    std::vector<double> lifted(y.begin(), y.end());
    for (int i = 0; i < n; ++i) {
      if (y[i] == 1.0) continue;
      lifted[i] = 1.0;
      out[i].value = std::max(0.0, ExactExtension(objective, lifted) - base);
      lifted[i] = y[i];
    }
    return out;
  }
  if (cfg.samples < 1) throw InvalidArgument("samples must be positive");
  std::vector<Moments> moments(n);
  for (int k = 0; k < cfg.samples; ++k) {
    const ItemSet s = DrawSet(y, DeriveSeed(cfg.seed, cfg.stream, k));
    for (int i = 0; i < n; ++i) {
      moments[i].Add(s.contains(i) ? 0.0 : objective.Marginal(i, s));
    }
  }
  for (int i = 0; i < n; ++i) out[i] = moments[i].Finish(cfg.samples);
  return out;
}

ExtensionEstimate ExtensionMarginal(const Objective& objective, ItemId i,
                                    std::span<const double> y,
                                    const EstimationConfig& cfg) {
  CheckPoint(objective, y);
  if (i < 0 || i >= objective.item_count()) {
    throw InvalidArgument("item " + std::to_string(i) + " out of range");
  }
  if (y[i] == 1.0) return {0.0, true, 0.0};
  if (auto s = IntegralSet(y)) return {objective.Marginal(i, *s), true, 0.0};
  const bool exact =
      UseExactPath(objective, cfg) ||
      (cfg.method == ExtensionMethod::kAuto &&
       objective.ClosedFormExtension(y).has_value());
  if (exact) {
    std::vector<double> lifted(y.begin(), y.end());
    lifted[i] = 1.0;
    const double diff =
        ExactExtension(objective, lifted) - ExactExtension(objective, y);
    return {std::max(0.0, diff), true, 0.0};
  }
  if (cfg.samples < 1) throw InvalidArgument("samples must be positive");
  Moments m;
  for (int k = 0; k < cfg.samples; ++k) {
    const ItemSet s = DrawSet(y, DeriveSeed(cfg.seed, cfg.stream, k));
    m.Add(s.contains(i) ? 0.0 : objective.Marginal(i, s));
  }
  return m.Finish(cfg.samples);
}

}  // namespace ltfair
