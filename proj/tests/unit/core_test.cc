// Copyright 2026 The DFEP Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include "brute.h"
#include "dfep/error.h"
#include "dfep/generators.h"
#include "dfep/instance_io.h"
#include "dfep/pairs.h"
#include "dfep/rational.h"
#include "fixtures.h"

namespace dfep {
namespace {

using testing::BatchParams;
using testing::BrutePairs;
using testing::FiveObjects;
using testing::MakeInstance;
using testing::MaskObjects;

TEST(RationalTest, ParseAndFormat) {
  EXPECT_EQ(FormatRational(*ParseRational("2/4")), "1/2");
  EXPECT_EQ(FormatRational(*ParseRational("3")), "3");
  EXPECT_EQ(FormatRational(*ParseRational("-6/3")), "-2");
  EXPECT_FALSE(ParseRational("1/0"));
  EXPECT_FALSE(ParseRational("x"));
  EXPECT_FALSE(ParseRational("1/"));
  EXPECT_FALSE(ParseRational("0.5"));
  EXPECT_EQ(FormatDecimal(MakeRational(49, 10)), "4.9");
  EXPECT_EQ(RatioOrOne(0, 0), 1);
  EXPECT_EQ(RatioOrOne(3, 6), MakeRational(1, 2));
}

TEST(SubsetMaskTest, SetAlgebraAcrossWords) {
  SubsetMask a(130), b(130);
  a.insert(0);
  a.insert(64);
  a.insert(129);
  b.insert(64);
  b.insert(100);
  EXPECT_EQ((a & b).Indices(), std::vector<int>({64}));
  EXPECT_EQ((a | b).count(), 4);
  EXPECT_EQ((a - b).Indices(), std::vector<int>({0, 129}));
  EXPECT_TRUE((a & b).IsSubsetOf(a));
  EXPECT_EQ(a.First(), 0);
  EXPECT_EQ(SubsetMask::Full(130).count(), 130);
  EXPECT_EQ(a.ToString(), "{0,64,129}");
  EXPECT_EQ(SubsetMask::FromWord(3, 0xFF).count(), 3);
}

TEST(ValidateTest, FiveObjectShapeIsValid) {
  const Instance inst = FiveObjects();
  EXPECT_EQ(inst.num_objects(), 5);
  EXPECT_EQ(inst.num_tests(), 3);
  EXPECT_EQ(inst.cost(0), 2);
  EXPECT_EQ(inst.cost(1), 1);
  EXPECT_EQ(inst.cost(2), 3);
}

RawInstance TwoObjectRaw() {
  RawInstance raw;
  raw.num_classes = 2;
  raw.objects = {{0, 0, MakeRational(1, 2)}, {1, 1, MakeRational(1, 2)}};
  raw.tests = {{0, 1, {0, 1}}};
  return raw;
}

bool HasIssue(const ValidationReport& r, IssueKind kind) {
  for (const auto& i : r.issues) {
    if (i.kind == kind) return true;
  }
  return false;
}

TEST(ValidateTest, ProbabilitiesMustSumToOne) {
  RawInstance raw = TwoObjectRaw();
  raw.objects[1].prob = MakeRational(2, 5);  // sums to 9/10
  const auto report = Validate(raw);
  EXPECT_FALSE(report.ok());
  EXPECT_TRUE(HasIssue(report, IssueKind::kNonUnitProbabilitySum));
}

TEST(ValidateTest, InseparableCrossClassPairIsReported) {
  RawInstance raw = TwoObjectRaw();
  raw.tests[0].outcomes = {1, 1};
  const auto report = Validate(raw);
  ASSERT_TRUE(HasIssue(report, IssueKind::kInseparableCrossClassPair));
  for (const auto& i : report.issues) {
    if (i.kind != IssueKind::kInseparableCrossClassPair) continue;
    EXPECT_EQ(i.first, 0);
    EXPECT_EQ(i.second, 1);
  }
}

TEST(ValidateTest, SameClassDuplicatesAreAllowed) {
  RawInstance raw = TwoObjectRaw();
  raw.num_classes = 1;
  raw.objects[1].class_id = 0;
  raw.tests[0].outcomes = {1, 1};
  EXPECT_TRUE(Validate(raw).ok());
}

TEST(ValidateTest, ReportsEveryViolation) {
  RawInstance raw = TwoObjectRaw();
  raw.num_classes = 3;               // class 2 unused
  raw.tests[0].cost = 0;             // non-positive cost
  raw.tests.push_back({1, 1, {0}});  // short outcome row
  raw.objects[0].prob = MakeRational(-1, 2);
  const auto report = Validate(raw);
  EXPECT_TRUE(HasIssue(report, IssueKind::kEmptyClass));
  EXPECT_TRUE(HasIssue(report, IssueKind::kNonPositiveCost));
  EXPECT_TRUE(HasIssue(report, IssueKind::kOutcomeCountMismatch));
  EXPECT_TRUE(HasIssue(report, IssueKind::kNegativeProbability));
}

TEST(ValidateTest, OutcomeRangeChecked) {
  RawInstance raw = TwoObjectRaw();
  raw.num_outcomes = 2;
  raw.tests[0].outcomes = {0, 2};
  EXPECT_TRUE(HasIssue(Validate(raw), IssueKind::kOutcomeOutOfRange));
  raw.tests[0].outcomes = {0, -1};
  EXPECT_TRUE(HasIssue(Validate(raw), IssueKind::kOutcomeOutOfRange));
}

TEST(ValidateTest, ZeroProbabilityObjectsAllowed) {
  RawInstance raw = TwoObjectRaw();
  raw.objects[0].prob = 0;
  raw.objects[1].prob = 1;
  EXPECT_TRUE(Validate(raw).ok());
}

TEST(ValidateTest, ThrowsInvalidInstance) {
  RawInstance raw = TwoObjectRaw();
  raw.tests[0].outcomes = {0, 0};
  try {
    ValidateOrThrow(raw);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidInstance);
  }
}

TEST(PairsTest, FiveObjectsHaveEightPairs) {
  const Instance inst = FiveObjects();
  EXPECT_EQ(CountPairs(inst, inst.all()), 8);
  EXPECT_EQ(CountClasses(inst, inst.all()).counts, std::vector<int>({2, 1, 2}));
}

TEST(PairsTest, TrivialCounts) {
  const Instance one = MakeInstance({0, 0, 0}, {"1/3", "1/3", "1/3"}, {1}, {{0, 1, 0}});
  EXPECT_EQ(CountPairs(one, one.all()), 0);
  const Instance two = MakeInstance({0, 1}, {"1/2", "1/2"}, {1}, {{0, 1}});
  EXPECT_EQ(CountPairs(two, two.all()), 1);
}

TEST(PairsTest, FormulaMatchesEnumerationOnAllSubsets) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Instance inst = GenRandom(BatchParams(seed, 10));
    const std::uint64_t limit = std::uint64_t{1} << inst.num_objects();
    for (std::uint64_t w = 0; w < limit; ++w) {
      const auto g = SubsetMask::FromWord(inst.num_objects(), w);
      ASSERT_EQ(CountPairs(inst, g), BrutePairs(inst, MaskObjects(g)));
      // Restriction monotonicity against every one-smaller subset.
      g.ForEach([&](int s) {
        SubsetMask smaller = g;
        smaller.erase(s);
        ASSERT_LE(CountPairs(inst, smaller), CountPairs(inst, g));
      });
    }
  }
}

TEST(OutcomePartitionTest, ConstantTestGivesOneCell) {
  const Instance inst = MakeInstance({0, 1, 1}, {"1/3", "1/3", "1/3"}, {1, 1},
                                     {{0, 0, 0}, {0, 1, 2}});
  const auto cells = OutcomePartition(inst, 0, inst.all());
  ASSERT_EQ(cells.size(), 1u);
  EXPECT_EQ(cells[0].members, inst.all());
  const auto ss = StarAndSigma(inst, 0, inst.all());
  EXPECT_EQ(ss.star, inst.all());
  EXPECT_TRUE(ss.sigma.empty());
  const auto tri = Tripartition(inst, 0, inst.all());
  EXPECT_EQ(tri.kept, 0);
  EXPECT_EQ(tri.separated, 0);
  EXPECT_EQ(tri.uncovered, CountPairs(inst, inst.all()));
}

TEST(OutcomePartitionTest, BinarySplitSizes) {
  const Instance inst = MakeInstance({0, 0, 1, 1, 2}, {"1/5", "1/5", "1/5", "1/5", "1/5"},
                                     {1, 1}, {{0, 0, 0, 1, 1}, {0, 1, 2, 3, 4}});
  const auto cells = OutcomePartition(inst, 0, inst.all());
  ASSERT_EQ(cells.size(), 2u);
  EXPECT_EQ(cells[0].members.count(), 3);
  EXPECT_EQ(cells[1].members.count(), 2);
}

TEST(OutcomePartitionTest, UnusedOutcomeOmitted) {
  const Instance inst = MakeInstance({0, 1, 1}, {"1/3", "1/3", "1/3"}, {1, 1},
                                     {{0, 2, 2}, {0, 1, 2}});
  EXPECT_EQ(inst.num_outcomes(), 3);
  const auto cells = OutcomePartition(inst, 0, inst.all());
  ASSERT_EQ(cells.size(), 2u);
  EXPECT_EQ(cells[0].outcome, 0);
  EXPECT_EQ(cells[1].outcome, 2);
}

TEST(OutcomePartitionTest, CellsPartitionEverySubset) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Instance inst = GenRandom(BatchParams(seed, 8));
    const std::uint64_t limit = std::uint64_t{1} << inst.num_objects();
    for (std::uint64_t w = 0; w < limit; w += 3) {
      const auto g = SubsetMask::FromWord(inst.num_objects(), w);
      for (int t = 0; t < inst.num_tests(); ++t) {
        SubsetMask u = inst.Empty();
        for (const auto& cell : OutcomePartition(inst, t, g)) {
          ASSERT_FALSE(cell.members.empty());
          ASSERT_FALSE(cell.members.Intersects(u));
          u |= cell.members;
        }
        ASSERT_EQ(u, g);
      }
    }
  }
}

TEST(StarTest, LargerPairCountWins) {
  // Cell 0 holds classes (2,1) -> 2 pairs; cell 1 holds (0,2) -> 0 pairs.
  const Instance inst = MakeInstance({0, 0, 1, 1, 1},
                                     {"1/5", "1/5", "1/5", "1/5", "1/5"}, {1, 1},
                                     {{0, 0, 0, 1, 1}, {0, 1, 2, 3, 4}});
  const auto ss = StarAndSigma(inst, 0, inst.all());
  EXPECT_EQ(ss.star_outcome, 0);
  EXPECT_EQ(ss.star.Indices(), std::vector<int>({0, 1, 2}));
  EXPECT_EQ(ss.sigma.Indices(), std::vector<int>({3, 4}));
}

TEST(StarTest, TiesGoToLowestOutcome) {
  const Instance inst = MakeInstance({0, 1, 0, 1}, {"1/4", "1/4", "1/4", "1/4"}, {1, 1},
                                     {{1, 1, 0, 0}, {0, 1, 2, 3}});
  EXPECT_EQ(StarAndSigma(inst, 0, inst.all()).star_outcome, 0);
}

TEST(TripartitionTest, IsolatingTestCoversEverything) {
  // Star {0} on the tie; the pair (1, 2) lies inside sigma.
  const Instance inst = MakeInstance({0, 1, 2}, {"1/3", "1/3", "1/3"}, {1}, {{0, 1, 2}});
  const auto tri = Tripartition(inst, 0, inst.all());
  EXPECT_EQ(tri.kept, 1);
  EXPECT_EQ(tri.separated, 2);
  EXPECT_EQ(tri.uncovered, 0);
}

TEST(TripartitionTest, MatchesPairByPairClassification) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const Instance inst = GenRandom(BatchParams(seed, 9));
    const std::uint64_t limit = std::uint64_t{1} << inst.num_objects();
    for (std::uint64_t w = 1; w < limit; w += 5) {
      const auto g = SubsetMask::FromWord(inst.num_objects(), w);
      for (int t = 0; t < inst.num_tests(); ++t) {
        const auto tri = Tripartition(inst, t, g);
        const auto brute = testing::BruteClassifyPairs(inst, t, MaskObjects(g));
        ASSERT_EQ(tri.kept, brute.kept);
        ASSERT_EQ(tri.separated, brute.separated);
        ASSERT_EQ(tri.uncovered, brute.uncovered);
        ASSERT_EQ(tri.kept + tri.separated + tri.uncovered, CountPairs(inst, g));
        // Star maximality.
        for (const auto& cell : OutcomePartition(inst, t, g)) {
          ASSERT_LE(CountPairs(inst, cell.members), tri.uncovered);
        }
      }
    }
  }
}

TEST(InstanceIoTest, RoundTripIsByteStable) {
  const Instance inst = FiveObjects();
  const std::string once = InstanceToJson(inst);
  const Instance again = ValidateOrThrow(ParseInstanceJson(once));
  EXPECT_EQ(InstanceToJson(again), once);
}

TEST(InstanceIoTest, RejectsUnknownKeys) {
  const std::string text = R"({"num_classes": 1, "objects": [{"id": 0, "class": 0,
    "prob": "1"}], "tests": [], "extra": 1})";
  try {
    ParseInstanceJson(text);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidInput);
  }
}

TEST(InstanceIoTest, ProbabilityMustBeString) {
  const std::string text = R"({"num_classes": 1, "objects": [{"id": 0, "class": 0,
    "prob": 1}], "tests": []})";
  EXPECT_THROW(ParseInstanceJson(text), Error);
}

TEST(InstanceIoTest, MalformedJsonIsInputError) {
  try {
    ParseInstanceJson("{");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidInput);
  }
}

}  // namespace
}  // namespace dfep
