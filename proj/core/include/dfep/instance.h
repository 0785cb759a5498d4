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

// The problem instance: objects with classes and exact probabilities, and
// tests with integer costs and one outcome label per object.
//
// An Instance can only be obtained through Validate(), so every Instance in
// the program satisfies:
//   - class ids lie in [0, num_classes) and every class has an object;
//   - probabilities are nonnegative and sum to exactly 1;
//   - test costs are integers >= 1;
//   - each test has one outcome in [0, num_outcomes) per object;
//   - any two objects of different classes disagree on some test.
// Objects of the same class may be indistinguishable.

#ifndef DFEP_INSTANCE_H_
#define DFEP_INSTANCE_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dfep/rational.h"
#include "dfep/subset_mask.h"

namespace dfep {

using Cost = std::int64_t;

struct ObjectRecord {
  int id = 0;
  int class_id = 0;
  Rational prob;
};

struct TestRecord {
  int id = 0;
  Cost cost = 1;
  std::vector<int> outcomes;
};

// Unchecked data as read from a file or produced by a generator.
struct RawInstance {
  int num_classes = 0;
  // 0 means "derive as 1 + largest outcome label".
  int num_outcomes = 0;
  std::vector<ObjectRecord> objects;
  std::vector<TestRecord> tests;
};

enum class IssueKind {
  kNoObjects,
  kBadClassCount,
  kIdMismatch,
  kClassOutOfRange,
  kEmptyClass,
  kNegativeProbability,
  kNonUnitProbabilitySum,
  kNonPositiveCost,
  kOutcomeCountMismatch,
  kOutcomeOutOfRange,
  kInseparableCrossClassPair,
};

std::string_view IssueKindName(IssueKind kind);

struct ValidationIssue {
  IssueKind kind;
  std::string message;
  // Offending object pair for kInseparableCrossClassPair, otherwise the
  // offending object or test id in `first` (or -1).
  int first = -1;
  int second = -1;
};

struct ValidationReport;

class Instance {
 public:
  int num_objects() const { return static_cast<int>(objects_.size()); }
  int num_tests() const { return static_cast<int>(tests_.size()); }
  int num_classes() const { return num_classes_; }
  int num_outcomes() const { return num_outcomes_; }

  std::span<const ObjectRecord> objects() const { return objects_; }
  std::span<const TestRecord> tests() const { return tests_; }
  const ObjectRecord& object(int s) const { return objects_[s]; }
  const TestRecord& test(int t) const { return tests_[t]; }

  int class_of(int s) const { return objects_[s].class_id; }
  Cost cost(int t) const { return tests_[t].cost; }
  int outcome(int t, int s) const { return tests_[t].outcomes[s]; }

  const SubsetMask& all() const { return all_; }
  SubsetMask Empty() const { return SubsetMask(objects_.size()); }
  const SubsetMask& class_mask(int c) const { return class_masks_[c]; }
  // Objects of S answering `o` to test t.
  const SubsetMask& outcome_mask(int t, int o) const {
    return outcome_masks_[t][o];
  }

  // Probabilities are stored as integer weights over a common denominator:
  // p(s) = weight(s) / weight_denominator(). Mass comparisons and sums are
  // then integer operations.
  const BigInt& weight(int s) const { return weights_[s]; }
  const BigInt& weight_denominator() const { return denominator_; }
  BigInt Weight(const SubsetMask& set) const;
  Rational Probability(const SubsetMask& set) const;

  Cost TotalCost() const;
  std::vector<int> AllTests() const;

  RawInstance ToRaw() const;

 private:
  friend ValidationReport Validate(RawInstance raw);
  Instance() = default;

  int num_classes_ = 0;
  int num_outcomes_ = 0;
  std::vector<ObjectRecord> objects_;
  std::vector<TestRecord> tests_;
  SubsetMask all_;
  std::vector<SubsetMask> class_masks_;
  std::vector<std::vector<SubsetMask>> outcome_masks_;
  std::vector<BigInt> weights_;
  BigInt denominator_ = 1;
};

struct ValidationReport {
  std::optional<Instance> instance;
  std::vector<ValidationIssue> issues;

  bool ok() const { return instance.has_value(); }
  std::string Summary() const;
};

// Checks every invariant and reports all violations, not just the first.
ValidationReport Validate(RawInstance raw);

// Validate() that throws Error(kInvalidInstance) with the issue summary.
Instance ValidateOrThrow(RawInstance raw);

}  // namespace dfep

#endif  // DFEP_INSTANCE_H_
