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

#include <gtest/gtest.h>

#include <vector>

#include "ltfair/random.h"

namespace ltfair {
namespace {

TEST(ItemSetTest, NormalizesToSortedUnique) {
  const ItemSet s({3, 1, 3, 2});
  EXPECT_EQ(s.ids(), (std::vector<ItemId>{1, 2, 3}));
  EXPECT_EQ(s.size(), 3);
  EXPECT_TRUE(s.contains(2));
  EXPECT_FALSE(s.contains(0));
  EXPECT_EQ(s.ToString(), "{1,2,3}");
}

TEST(ItemSetTest, InsertEraseWith) {
  ItemSet s;
  s.insert(4);
  s.insert(1);
  s.insert(4);
  EXPECT_EQ(s, ItemSet({1, 4}));
  s.erase(1);
  s.erase(7);
  EXPECT_EQ(s, ItemSet({4}));
  EXPECT_EQ(s.With(0), ItemSet({0, 4}));
  EXPECT_EQ(s, ItemSet({4}));
}

TEST(ItemSetTest, FromMaskAndCountIn) {
  const ItemSet s = ItemSet::FromMask(0b10110);
  EXPECT_EQ(s, ItemSet({1, 2, 4}));
  EXPECT_EQ(s.CountIn({0, 1, 4, 5}), 2);
  EXPECT_EQ(s.CountIn({}), 0);
}

TEST(ItemSetTest, OrderingIsLexicographic) {
  EXPECT_LT(ItemSet({0, 2}), ItemSet({1}));
  EXPECT_LT(ItemSet({0}), ItemSet({0, 1}));
  EXPECT_LT(ItemSet(), ItemSet({0}));
}

TEST(ItemSetTest, EnumerationIsSizeThenLex) {
  std::vector<ItemSet> seen;
  ForEachSubsetUpTo(4, 2, [&](const ItemSet& s) { seen.push_back(s); });
  ASSERT_EQ(seen.size(), 1u + 4u + 6u);
  EXPECT_TRUE(seen[0].empty());
  for (size_t k = 1; k < seen.size(); ++k) {
    const bool ordered =
        seen[k - 1].size() < seen[k].size() ||
        (seen[k - 1].size() == seen[k].size() && seen[k - 1] < seen[k]);
    EXPECT_TRUE(ordered) << seen[k - 1].ToString() << " " << seen[k].ToString();
  }
  EXPECT_EQ(CountSubsetsUpTo(4, 2, 1000), 11u);
  EXPECT_EQ(CountSubsetsUpTo(30, 15, 1000), 1001u);
}

TEST(SplitMix64Test, UniformInUnitIntervalAndDeterministic) {
  SplitMix64 a(7);
  SplitMix64 b(7);
  for (int k = 0; k < 1000; ++k) {
    const double u = a.Uniform();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
    EXPECT_EQ(u, b.Uniform());
  }
  EXPECT_NE(DeriveSeed(1, 2, 3), DeriveSeed(1, 2, 4));
  EXPECT_NE(DeriveSeed(1, 2, 3), DeriveSeed(1, 3, 3));
  EXPECT_EQ(DeriveSeed(1, 2, 3), DeriveSeed(1, 2, 3));
}

}  // namespace
}  // namespace ltfair
