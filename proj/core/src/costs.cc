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

#include "dfep/costs.h"

#include <algorithm>
#include <set>

#include "dfep/error.h"
#include "dfep/pairs.h"

namespace dfep {

namespace {

void CheckDistinct(const std::vector<int>& tests) {
  std::set<int> seen;
  for (int t : tests) {
    if (!seen.insert(t).second) {
      throw Error(ErrorCode::kInvalidInput,
                  "test " + std::to_string(t) + " repeats in a test sequence");
    }
  }
}

void CheckIds(const Instance& inst, const TestSequence& seq) {
  for (int t : seq.tests()) {
    if (t < 0 || t >= inst.num_tests()) {
      throw Error(ErrorCode::kInvalidInput,
                  "unknown test id " + std::to_string(t));
    }
  }
}

std::vector<SubsetMask> Sigmas(const Instance& inst, const TestSequence& seq,
                               const SubsetMask& g) {
  std::vector<SubsetMask> out;
  out.reserve(seq.tests().size());
  for (int t : seq.tests()) out.push_back(StarAndSigma(inst, t, g).sigma);
  return out;
}

}  // namespace

TestSequence::TestSequence(std::vector<int> tests) : tests_(std::move(tests)) {
  CheckDistinct(tests_);
}

TestSequence::TestSequence(std::vector<int> tests, SubsetMask restriction)
    : tests_(std::move(tests)), restriction_(std::move(restriction)) {
  CheckDistinct(tests_);
}

Classification Classify(const DecisionTree& tree, const Instance& inst, int s) {
  Classification out;
  NodeId id = tree.root();
  while (!tree.is_leaf(id)) {
    const auto& node = tree.test_node(id);
    out.cost += inst.cost(node.test);
    out.path.push_back(node.test);
    auto it = node.children.find(inst.outcome(node.test, s));
    DFEP_CHECK(it != node.children.end(),
               "object " + std::to_string(s) + " has no branch for test " +
                   std::to_string(node.test));
    id = it->second;
  }
  out.class_id = tree.leaf_node(id).class_id;
  return out;
}

CostReport TreeCosts(const DecisionTree& tree, const Instance& inst) {
  CostReport report;
  report.per_object.reserve(inst.num_objects());
  BigInt weighted = 0;
  for (int s = 0; s < inst.num_objects(); ++s) {
    const Cost c = Classify(tree, inst, s).cost;
    report.per_object.push_back(c);
    report.worst = std::max(report.worst, c);
    weighted += inst.weight(s) * c;
  }
  report.expected = Rational(weighted, inst.weight_denominator());
  return report;
}

Rational SepCost(const Instance& inst, const TestSequence& seq) {
  if (seq.empty()) {
    throw Error(ErrorCode::kEmptySequence, "separation cost of an empty sequence");
  }
  CheckIds(inst, seq);
  const SubsetMask g = seq.Objects(inst);
  const auto sigmas = Sigmas(inst, seq, g);
  const auto tests = seq.tests();
  const int q = seq.size();

  BigInt weighted = 0;
  Cost prefix = 0;
  SubsetMask remaining = g;
  for (int j = 0; j < q - 1; ++j) {
    prefix += inst.cost(tests[j]);
    const SubsetMask first_covered = remaining & sigmas[j];
    weighted += inst.Weight(first_covered) * prefix;
    remaining -= first_covered;
  }
  prefix += inst.cost(tests[q - 1]);
  weighted += inst.Weight(remaining) * prefix;
  return Rational(weighted, inst.weight_denominator());
}

Rational SepCostK(const Instance& inst, const TestSequence& seq,
                  const Rational& k) {
  CheckIds(inst, seq);
  const SubsetMask g = seq.Objects(inst);
  const auto sigmas = Sigmas(inst, seq, g);
  const auto tests = seq.tests();

  BigInt weighted = 0;
  Cost prefix = 0;
  SubsetMask remaining = g;
  for (int j = 0; j < seq.size(); ++j) {
    prefix += inst.cost(tests[j]);
    const SubsetMask first_covered = remaining & sigmas[j];
    weighted += inst.Weight(first_covered) * prefix;
    remaining -= first_covered;
  }
  return Rational(weighted, inst.weight_denominator()) +
         inst.Probability(remaining) * k;
}

Cost TotCost(const Instance& inst, const TestSequence& seq) {
  CheckIds(inst, seq);
  Cost total = 0;
  for (int t : seq.tests()) total += inst.cost(t);
  return total;
}

PairCount CoveredPairs(const Instance& inst, const TestSequence& seq) {
  CheckIds(inst, seq);
  const SubsetMask g = seq.Objects(inst);
  SubsetMask in_every_star = g;
  for (int t : seq.tests()) in_every_star &= StarAndSigma(inst, t, g).star;
  return CountPairs(inst, g) - CountPairs(inst, in_every_star);
}

bool CoversAllPairs(const Instance& inst, const TestSequence& seq) {
  return CoveredPairs(inst, seq) == CountPairs(inst, seq.Objects(inst));
}

}  // namespace dfep
