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

#ifndef LTFAIR_DISTRIBUTION_H_
#define LTFAIR_DISTRIBUTION_H_

#include <vector>

#include "ltfair/item_set.h"

namespace ltfair {

struct WeightedSet {
  ItemSet set;
  double probability = 0.0;

  friend bool operator==(const WeightedSet&, const WeightedSet&) = default;
};

// A randomized selection: each support set is drawn with its probability and
// the empty set with `residual`, so probabilities plus residual sum to 1.
struct SelectionDistribution {
  std::vector<WeightedSet> support;
  double residual = 0.0;

  double support_mass() const {
    double total = 0.0;
    for (const WeightedSet& ws : support) total += ws.probability;
    return total;
  }

  static SelectionDistribution Point(ItemSet s) {
    SelectionDistribution d;
    if (s.empty()) {
      d.residual = 1.0;
    } else {
      d.support.push_back({std::move(s), 1.0});
    }
    return d;
  }

  friend bool operator==(const SelectionDistribution&,
                         const SelectionDistribution&) = default;
};

}  // namespace ltfair

#endif  // LTFAIR_DISTRIBUTION_H_
