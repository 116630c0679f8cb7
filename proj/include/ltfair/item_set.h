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

#ifndef LTFAIR_ITEM_SET_H_
#define LTFAIR_ITEM_SET_H_

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace ltfair {

using ItemId = int;

// Sorted, duplicate-free set of item ids. Ordering is lexicographic on the
// sorted id sequence, so the empty set is the smallest set.
class ItemSet {
 public:
  ItemSet() = default;
  ItemSet(std::initializer_list<ItemId> ids) : ids_(ids) { Normalize(); }
  explicit ItemSet(std::vector<ItemId> ids) : ids_(std::move(ids)) {
    Normalize();
  }

  // Builds the set {i : bit i of mask is set}.
  static ItemSet FromMask(uint64_t mask) {
    ItemSet s;
    for (int i = 0; mask != 0; ++i, mask >>= 1) {
      if (mask & 1) s.ids_.push_back(i);
    }
    return s;
  }

  bool contains(ItemId id) const {
    return std::binary_search(ids_.begin(), ids_.end(), id);
  }
  void insert(ItemId id) {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
    if (it == ids_.end() || *it != id) ids_.insert(it, id);
  }
  void erase(ItemId id) {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
    if (it != ids_.end() && *it == id) ids_.erase(it);
  }
  ItemSet With(ItemId id) const {
    ItemSet s = *this;
    s.insert(id);
    return s;
  }

  int size() const { return static_cast<int>(ids_.size()); }
  bool empty() const { return ids_.empty(); }
  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }
  const std::vector<ItemId>& ids() const { return ids_; }

  // Number of members that also belong to `group` (a sorted id list).
  int CountIn(const std::vector<ItemId>& group) const {
    int count = 0;
    auto a = ids_.begin();
    auto b = group.begin();
    while (a != ids_.end() && b != group.end()) {
      if (*a < *b) {
        ++a;
      } else if (*b < *a) {
        ++b;
      } else {
        ++count;
        ++a;
        ++b;
      }
    }
    return count;
  }

  std::string ToString() const {
    std::string out = "{";
    for (size_t k = 0; k < ids_.size(); ++k) {
      if (k) out += ",";
      out += std::to_string(ids_[k]);
    }
    return out + "}";
  }

  friend bool operator==(const ItemSet&, const ItemSet&) = default;
  friend auto operator<=>(const ItemSet& a, const ItemSet& b) {
    return a.ids_ <=> b.ids_;
  }

 private:
  void Normalize() {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
  }

  std::vector<ItemId> ids_;
};

// Calls `visit(const ItemSet&)` for every subset of {0..n-1} with at most
// `max_size` members, ordered by size and then lexicographically.
void ForEachSubsetUpTo(int n, int max_size,
                       const std::function<void(const ItemSet&)>& visit);

// Number of subsets of an n-set with at most k members, saturating at
// `cap` + 1 so callers can compare against a budget without overflow.
uint64_t CountSubsetsUpTo(int n, int k, uint64_t cap);

}  // namespace ltfair

#endif  // LTFAIR_ITEM_SET_H_
