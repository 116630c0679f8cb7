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

#include "ltfair/io.h"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>

#include "ltfair/errors.h"
#include "test_util.h"

namespace ltfair {
namespace {

namespace fs = std::filesystem;
using testing::DataPath;

std::string TempPath(const std::string& name) {
  return (fs::temp_directory_path() / ("ltfair_io_test_" + name)).string();
}

TEST(LoadProblemTest, Rand2Fixture) {
  const Problem p = LoadProblem(DataPath("rand2.json"));
  EXPECT_EQ(p.instance.item_count, 2);
  EXPECT_EQ(p.instance.group_count(), 2);
  EXPECT_EQ(p.instance.budget, 1);
  EXPECT_EQ(p.instance, testing::Rand2Instance());
  ASSERT_TRUE(p.objective);
  EXPECT_EQ(p.objective->kind(), ObjectiveKind::kCoverage);
  EXPECT_DOUBLE_EQ(p.objective->Evaluate(ItemSet({0, 1})), 1.0);
}

TEST(LoadProblemTest, NamesResolveAgainstItemList) {
  const Problem p = LoadProblem(DataPath("toy3.json"));
  EXPECT_EQ(p.instance.item_names,
            (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_EQ(p.instance.groups[0].members, (std::vector<ItemId>{0, 1}));
  EXPECT_EQ(p.instance.groups[1].members, (std::vector<ItemId>{2}));
  EXPECT_DOUBLE_EQ(p.objective->Evaluate(ItemSet({0, 1})), 3.0);
  EXPECT_DOUBLE_EQ(p.objective->Evaluate(ItemSet({2})), 1.0);
}

TEST(LoadProblemTest, OutOfRangeMemberIsInvalidInstance) {
  const std::string text = R"({"items": 3, "budget": 1,
    "groups": [{"name": "A", "members": [0, 5], "alpha": 0, "beta": 1}]})";
  EXPECT_THROW(ParseProblem(text), InvalidInstance);
  const std::string quoted = R"({"items": 3, "budget": 1,
    "groups": [{"name": "A", "members": ["5"], "alpha": 0, "beta": 1}]})";
  EXPECT_THROW(ParseProblem(quoted), InvalidInstance);
}

TEST(LoadProblemTest, NonNumericAlphaIsParseErrorWithFieldPath) {
  const std::string text = R"({"items": 3, "budget": 1,
    "groups": [{"name": "A", "members": [0], "alpha": "x", "beta": 1}]})";
  try {
    ParseProblem(text, "bad.json");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("groups[0].alpha"), std::string::npos)
        << e.what();
    EXPECT_NE(std::string(e.what()).find("bad.json"), std::string::npos);
  }
}

TEST(LoadProblemTest, MalformedJsonReportsLine) {
  const std::string text = "{\n  \"items\": 3,\n  \"budget\": ,\n}";
  try {
    ParseProblem(text, "broken.json");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("broken.json:3:"), std::string::npos)
        << e.what();
  }
}

TEST(LoadProblemTest, StructuralErrors) {
  EXPECT_THROW(ParseProblem("[]"), ParseError);
  EXPECT_THROW(ParseProblem(R"({"budget": 1, "groups": []})"), ParseError);
  EXPECT_THROW(ParseProblem(R"({"items": 2.5, "budget": 1, "groups": []})"),
               ParseError);
  EXPECT_THROW(ParseProblem(R"({"items": 2, "budget": 1.5,
      "groups": [{"name": "A", "members": [0], "alpha": 0, "beta": 1}]})"),
               ParseError);
  EXPECT_THROW(ParseProblem(R"({"items": ["a"], "budget": 1,
      "groups": [{"name": "A", "members": ["zz"], "alpha": 0, "beta": 1}]})"),
               ParseError);
  EXPECT_THROW(ParseProblem(R"({"items": 2, "budget": 1,
      "groups": [{"name": "A", "members": [0], "beta": 1}]})"),
               ParseError);
  EXPECT_THROW(LoadProblem(DataPath("does-not-exist.json")), IoError);
}

TEST(LoadProblemTest, ObjectiveDescriptorErrors) {
  const std::string base = R"({"items": 2, "budget": 1,
      "groups": [{"name": "A", "members": [0, 1], "alpha": 0, "beta": 1}],
      "objective": )";
  EXPECT_THROW(ParseProblem(base + R"({"type": "nope"}})"), ParseError);
  EXPECT_THROW(ParseProblem(base + R"({"type": "modular", "weights": [1]}})"),
               ParseError);
  EXPECT_THROW(
      ParseProblem(base + R"({"type": "modular", "weights": [1, -2]}})"),
      ParseError);
  EXPECT_THROW(ParseProblem(base + R"({"type": "coverage",
      "elements": {"u": 1}, "covers": {"0": ["v"]}}})"),
               ParseError);
  EXPECT_THROW(ParseProblem(base + R"({"type": "facility_location",
      "similarity": [[1]]}})"),
               ParseError);
}

TEST(LoadProblemTest, AllObjectiveKinds) {
  const std::string base = R"({"items": 3, "budget": 2,
      "groups": [{"name": "A", "members": [0, 1, 2], "alpha": 0, "beta": 2}],
      "objective": )";
  const Problem modular =
      ParseProblem(base + R"({"type": "modular", "weights": [3, 2, 5]}})");
  EXPECT_DOUBLE_EQ(modular.objective->Evaluate(ItemSet({0, 2})), 8.0);
  const Problem facility = ParseProblem(base + R"({"type": "facility_location",
      "similarity": [[1, 0, 2], [0, 3, 1]]}})");
  EXPECT_DOUBLE_EQ(facility.objective->Evaluate(ItemSet({0, 1})), 4.0);
  const Problem none = ParseProblem(R"({"items": 1, "budget": 1,
      "groups": [{"name": "A", "members": [0], "alpha": 0, "beta": 1}]})");
  EXPECT_FALSE(none.objective);
}

void ExpectRoundTrip(const Problem& p) {
  const std::string path = TempPath("roundtrip.json");
  SaveProblem(p.instance, p.objective.get(), path);
  const Problem q = LoadProblem(path);
  EXPECT_EQ(p.instance, q.instance);
  EXPECT_EQ(SerializeProblem(p.instance, p.objective.get()),
            SerializeProblem(q.instance, q.objective.get()));
  fs::remove(path);
}

TEST(SaveProblemTest, Rand2RoundTrip) {
  ExpectRoundTrip(LoadProblem(DataPath("rand2.json")));
}

TEST(SaveProblemTest, Toy3RoundTrip) {
  ExpectRoundTrip(LoadProblem(DataPath("toy3.json")));
}

TEST(SaveProblemTest, RandomInstancesRoundTripBitExact) {
  testing::Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    Instance instance = testing::RandomOverlappingInstance(
        rng, {8, 3, 4, /*integral=*/false});
    // Awkward reals that need all 17 significant digits.
    instance.groups[0].beta += 1.0 / 3.0;
    Problem p{instance, nullptr};
    switch (trial % 3) {
      case 0:
        p.objective = testing::RandomCoverage(rng, instance.item_count);
        break;
      case 1:
        p.objective = testing::RandomModular(rng, instance.item_count);
        break;
      default:
        p.objective = testing::RandomFacility(rng, instance.item_count);
    }
    ExpectRoundTrip(p);
  }
}

TEST(SaveProblemTest, InstanceOnly) {
  const std::string path = TempPath("instance_only.json");
  SaveInstance(testing::Toy3Instance(), path);
  const Problem q = LoadProblem(path);
  EXPECT_EQ(q.instance, testing::Toy3Instance());
  EXPECT_FALSE(q.objective);
  fs::remove(path);
}

TEST(SaveProblemTest, UnwritablePathIsIoError) {
  EXPECT_THROW(SaveInstance(testing::Toy3Instance(),
                            "/nonexistent-dir/ltfair/out.json"),
               IoError);
}

TEST(ResultDocumentTest, DistributionAndPointForms) {
  const SelectionDistribution d = ParseResultDistribution(
      R"({"distribution": [{"set": [0], "prob": 0.25},
                           {"set": [1, 0], "prob": 0.5}], "residual": 0.25})",
      "r.json");
  ASSERT_EQ(d.support.size(), 2u);
  EXPECT_EQ(d.support[1].set, ItemSet({0, 1}));
  EXPECT_DOUBLE_EQ(d.residual, 0.25);

  const SelectionDistribution implicit = ParseResultDistribution(
      R"({"distribution": [{"set": [0], "prob": 0.75}]})", "r.json");
  EXPECT_DOUBLE_EQ(implicit.residual, 0.25);

  const SelectionDistribution point =
      ParseResultDistribution(R"({"set": [2, 0], "value": 3})", "r.json");
  EXPECT_EQ(point, SelectionDistribution::Point(ItemSet({0, 2})));

  EXPECT_THROW(ParseResultDistribution(R"({"value": 1})", "r.json"),
               ParseError);
  EXPECT_THROW(
      ParseResultDistribution(R"({"distribution": [{"set": [0]}]})", "r.json"),
      ParseError);
}

TEST(ResultDocumentTest, DistributionJsonShape) {
  SelectionDistribution d;
  d.support.push_back({ItemSet({0}), 0.5});
  d.residual = 0.5;
  EXPECT_EQ(DistributionToJson(d).dump(), R"([{"set":[0],"prob":0.5}])");
}

}  // namespace
}  // namespace ltfair
