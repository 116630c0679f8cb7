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

#ifndef LTFAIR_OBJECTIVES_H_
#define LTFAIR_OBJECTIVES_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ltfair/item_set.h"

namespace ltfair {

using FractionalPoint = std::vector<double>;

enum class ObjectiveKind { kCoverage, kFacilityLocation, kModular, kCustom };

std::string ObjectiveKindName(ObjectiveKind kind);

// Monotone, non-negative, submodular set function over {0..n-1}.
//
// Library callers may subclass this for objectives that never cross the file
// boundary; only Evaluate, item_count and kind are mandatory.
class Objective {
 public:
  virtual ~Objective() = default;

  virtual ObjectiveKind kind() const = 0;
  virtual int item_count() const = 0;

  // f(s). Throws InvalidArgument on an out-of-range id.
  virtual double Evaluate(const ItemSet& s) const = 0;

  // f({e} ∪ s) - f(s). Throws InvalidArgument when e ∈ s. The default
  // implementation takes the difference of two evaluations.
  virtual double Marginal(ItemId e, const ItemSet& s) const;

  // Closed-form multilinear extension F(y), if the family has one.
  // `y` has already been range-checked.
  virtual std::optional<double> ClosedFormExtension(
      std::span<const double> y) const;

 protected:
  void CheckSet(const ItemSet& s) const;
};

// f(S) = sum of w_u over universe elements u covered by some item of S.
class CoverageObjective final : public Objective {
 public:
  // covers[i] lists indices into `weights` covered by item i.
  CoverageObjective(std::vector<std::string> element_names,
                    std::vector<double> weights,
                    std::vector<std::vector<int>> covers);

  ObjectiveKind kind() const override { return ObjectiveKind::kCoverage; }
  int item_count() const override { return static_cast<int>(covers_.size()); }
  double Evaluate(const ItemSet& s) const override;
  double Marginal(ItemId e, const ItemSet& s) const override;
  std::optional<double> ClosedFormExtension(
      std::span<const double> y) const override;

  const std::vector<std::string>& element_names() const {
    return element_names_;
  }
  const std::vector<double>& weights() const { return weights_; }
  const std::vector<std::vector<int>>& covers() const { return covers_; }

 private:
  std::vector<std::string> element_names_;
  std::vector<double> weights_;
  std::vector<std::vector<int>> covers_;
  std::vector<std::vector<ItemId>> covered_by_;  // element -> items
};

// f(S) = sum over rows r of max_{j in S} similarity[r][j]; f(∅) = 0.
class FacilityLocationObjective final : public Objective {
 public:
  explicit FacilityLocationObjective(
      std::vector<std::vector<double>> similarity);

  ObjectiveKind kind() const override {
    return ObjectiveKind::kFacilityLocation;
  }
  int item_count() const override { return item_count_; }
  double Evaluate(const ItemSet& s) const override;
  double Marginal(ItemId e, const ItemSet& s) const override;
  // E[max] per row: sort the row descending, the k-th best item is the
  // maximum exactly when it is drawn and every better one is not.
  std::optional<double> ClosedFormExtension(
      std::span<const double> y) const override;

  const std::vector<std::vector<double>>& similarity() const {
    return similarity_;
  }

 private:
  std::vector<std::vector<double>> similarity_;
  int item_count_ = 0;
};

// f(S) = sum of w_i over i in S.
class ModularObjective final : public Objective {
 public:
  explicit ModularObjective(std::vector<double> weights);

  ObjectiveKind kind() const override { return ObjectiveKind::kModular; }
  int item_count() const override { return static_cast<int>(weights_.size()); }
  double Evaluate(const ItemSet& s) const override;
  double Marginal(ItemId e, const ItemSet& s) const override;
  std::optional<double> ClosedFormExtension(
      std::span<const double> y) const override;

  const std::vector<double>& weights() const { return weights_; }

 private:
  std::vector<double> weights_;
};

enum class ExtensionMethod {
  kAuto,        // closed form, else enumeration up to the threshold, else MC
  kExact,       // closed form or enumeration regardless of n
  kMonteCarlo,  // always sample
};

struct EstimationConfig {
  int samples = 10000;
  uint64_t seed = 0;
  int exact_threshold = 16;
  ExtensionMethod method = ExtensionMethod::kAuto;
  // Call-site ordinal; solvers bump this so every estimate draws from its
  // own deterministic stream.
  uint64_t stream = 0;
};

struct ExtensionEstimate {
  double value = 0.0;
  bool exact = true;
  double std_error = 0.0;  // 0 when exact
};

// F(y) = E[f(S_y)] where S_y contains item i independently with prob. y_i.
// Throws InvalidArgument if a coordinate is outside [0,1] or the dimension
// does not match.
ExtensionEstimate Extension(const Objective& objective,
                            std::span<const double> y,
                            const EstimationConfig& cfg = {});

// F(e_i ∨ y) - F(y). Monte Carlo estimates use the same draws for both
// terms.
ExtensionEstimate ExtensionMarginal(const Objective& objective, ItemId i,
                                    std::span<const double> y,
                                    const EstimationConfig& cfg = {});

// ExtensionMarginal for every item, sharing one batch of draws on the
// Monte Carlo path.
std::vector<ExtensionEstimate> ExtensionMarginals(
    const Objective& objective, std::span<const double> y,
    const EstimationConfig& cfg = {});

// Sum over all S of f(S) * P[S_y = S], restricted to the fractional
// coordinates of y. Exponential in the number of fractional coordinates.
double ExtensionByEnumeration(const Objective& objective,
                              std::span<const double> y);

}  // namespace ltfair

#endif  // LTFAIR_OBJECTIVES_H_
