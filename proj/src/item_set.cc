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

#include "ltfair/item_set.h"

#include <algorithm>

namespace ltfair {

void ForEachSubsetUpTo(int n, int max_size,
                       const std::function<void(const ItemSet&)>& visit) {
  max_size = std::min(max_size, n);
  for (int k = 0; k <= max_size; ++k) {
    std::vector<ItemId> combo(k);
    for (int i = 0; i < k; ++i) combo[i] = i;
    while (true) {
      visit(ItemSet(combo));
      // Advance to the next k-combination in lexicographic order.
      int pos = k - 1;
      while (pos >= 0 && combo[pos] == n - k + pos) --pos;
      if (pos < 0) break;
      ++combo[pos];
      for (int i = pos + 1; i < k; ++i) combo[i] = combo[i - 1] + 1;
    }
  }
}

uint64_t CountSubsetsUpTo(int n, int k, uint64_t cap) {
  k = std::min(k, n);
  uint64_t total = 0;
  uint64_t binom = 1;  // C(n, j)
  for (int j = 0; j <= k; ++j) {
    if (j > 0) {
      // C(n, j) = C(n, j-1) * (n-j+1) / j; saturate instead of overflowing.
      const unsigned __int128 next =
          static_cast<unsigned __int128>(binom) * (n - j + 1) / j;
      binom = next > cap ? cap + 1 : static_cast<uint64_t>(next);
    }
    total += binom;
    if (total > cap) return cap + 1;
  }
  return total;
}

}  // namespace ltfair
