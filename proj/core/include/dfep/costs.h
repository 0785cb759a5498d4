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

// Cost functionals of trees and of test sequences. All arithmetic is exact.

#ifndef DFEP_COSTS_H_
#define DFEP_COSTS_H_

#include <optional>
#include <span>
#include <vector>

#include "dfep/decision_tree.h"
#include "dfep/instance.h"
#include "dfep/rational.h"

namespace dfep {

// An ordered list of distinct test ids, optionally over a subset of the
// objects. Stars and sigmas for the sequence are taken on that subset.
class TestSequence {
 public:
  TestSequence() = default;
  // Throws Error(kInvalidInput) on duplicate ids.
  explicit TestSequence(std::vector<int> tests);
  TestSequence(std::vector<int> tests, SubsetMask restriction);

  std::span<const int> tests() const { return tests_; }
  int size() const { return static_cast<int>(tests_.size()); }
  bool empty() const { return tests_.empty(); }
  const std::optional<SubsetMask>& restriction() const { return restriction_; }

  SubsetMask Objects(const Instance& inst) const {
    return restriction_ ? *restriction_ : inst.all();
  }

 private:
  std::vector<int> tests_;
  std::optional<SubsetMask> restriction_;
};

struct Classification {
  int class_id = 0;
  Cost cost = 0;
  std::vector<int> path;  // tests in the order they are asked
};

// Routes object s from the root by its outcomes.
Classification Classify(const DecisionTree& tree, const Instance& inst, int s);

struct CostReport {
  Cost worst = 0;             // max_s cost(D, s)
  Rational expected;          // sum_s p(s) cost(D, s)
  std::vector<Cost> per_object;
};

CostReport TreeCosts(const DecisionTree& tree, const Instance& inst);

// Each object pays the prefix cost up to the first test whose sigma holds
// it, searching t_1..t_{q-1}; objects not found there pay the whole
// sequence. Throws Error(kEmptySequence) for q = 0.
Rational SepCost(const Instance& inst, const TestSequence& seq);

// Covered objects pay their first-cover prefix (t_q included); objects no
// test covers pay k.
Rational SepCostK(const Instance& inst, const TestSequence& seq,
                  const Rational& k);

Cost TotCost(const Instance& inst, const TestSequence& seq);

// True iff no cross-class pair lies inside the star of every test.
bool CoversAllPairs(const Instance& inst, const TestSequence& seq);

// Pairs of the sequence's object set covered by at least one test.
PairCount CoveredPairs(const Instance& inst, const TestSequence& seq);

}  // namespace dfep

#endif  // DFEP_COSTS_H_
