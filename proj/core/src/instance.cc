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

#include "dfep/instance.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "dfep/error.h"

namespace dfep {

namespace {

void AddIssue(std::vector<ValidationIssue>& issues, IssueKind kind,
              std::string message, int first = -1, int second = -1) {
  issues.push_back({kind, std::move(message), first, second});
}

// Refines S by every test; a block holding two classes is an inseparable
// cross-class pair. Returns the first such pair found (by lowest ids).
std::optional<std::pair<int, int>> FindInseparablePair(const RawInstance& raw) {
  std::map<std::vector<int>, std::vector<int>> blocks;
  const int n = static_cast<int>(raw.objects.size());
  for (int s = 0; s < n; ++s) {
    std::vector<int> signature;
    signature.reserve(raw.tests.size());
    for (const auto& t : raw.tests) signature.push_back(t.outcomes[s]);
    blocks[std::move(signature)].push_back(s);
  }
  std::optional<std::pair<int, int>> worst;
  for (const auto& [signature, members] : blocks) {
    const int first = members.front();
    for (int other : members) {
      if (raw.objects[other].class_id != raw.objects[first].class_id) {
        std::pair<int, int> pair{first, other};
        if (!worst || pair < *worst) worst = pair;
        break;
      }
    }
  }
  return worst;
}

}  // namespace

std::string_view IssueKindName(IssueKind kind) {
  switch (kind) {
    case IssueKind::kNoObjects: return "NoObjects";
    case IssueKind::kBadClassCount: return "BadClassCount";
    case IssueKind::kIdMismatch: return "IdMismatch";
    case IssueKind::kClassOutOfRange: return "ClassOutOfRange";
    case IssueKind::kEmptyClass: return "EmptyClass";
    case IssueKind::kNegativeProbability: return "NegativeProbability";
    case IssueKind::kNonUnitProbabilitySum: return "NonUnitProbabilitySum";
    case IssueKind::kNonPositiveCost: return "NonPositiveCost";
    case IssueKind::kOutcomeCountMismatch: return "OutcomeCountMismatch";
    case IssueKind::kOutcomeOutOfRange: return "OutcomeOutOfRange";
    case IssueKind::kInseparableCrossClassPair:
      return "InseparableCrossClassPair";
  }
  return "Unknown";
}

std::string ValidationReport::Summary() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < issues.size(); ++i) {
    if (i > 0) out << "\n";
    out << IssueKindName(issues[i].kind) << ": " << issues[i].message;
  }
  return out.str();
}

ValidationReport Validate(RawInstance raw) {
  ValidationReport report;
  auto& issues = report.issues;
  const int n = static_cast<int>(raw.objects.size());

  if (n == 0) AddIssue(issues, IssueKind::kNoObjects, "instance has no objects");
  if (raw.num_classes < 1) {
    AddIssue(issues, IssueKind::kBadClassCount,
             "num_classes must be positive, got " +
                 std::to_string(raw.num_classes));
  }

  std::vector<int> class_sizes(std::max(raw.num_classes, 0), 0);
  Rational total = 0;
  for (int s = 0; s < n; ++s) {
    const auto& obj = raw.objects[s];
    if (obj.id != s) {
      AddIssue(issues, IssueKind::kIdMismatch,
               "object at position " + std::to_string(s) + " has id " +
                   std::to_string(obj.id),
               s);
    }
    if (obj.class_id < 0 || obj.class_id >= raw.num_classes) {
      AddIssue(issues, IssueKind::kClassOutOfRange,
               "object " + std::to_string(s) + " has class " +
                   std::to_string(obj.class_id),
               s);
    } else {
      ++class_sizes[obj.class_id];
    }
    if (obj.prob < 0) {
      AddIssue(issues, IssueKind::kNegativeProbability,
               "object " + std::to_string(s) + " has probability " +
                   FormatRational(obj.prob),
               s);
    }
    total += obj.prob;
  }
  if (n > 0 && total != 1) {
    AddIssue(issues, IssueKind::kNonUnitProbabilitySum,
             "probabilities sum to " + FormatRational(total));
  }
  for (int c = 0; c < static_cast<int>(class_sizes.size()); ++c) {
    if (class_sizes[c] == 0) {
      AddIssue(issues, IssueKind::kEmptyClass,
               "class " + std::to_string(c) + " has no objects", c);
    }
  }

  int max_outcome = 0;
  bool outcomes_well_formed = true;
  for (int t = 0; t < static_cast<int>(raw.tests.size()); ++t) {
    const auto& test = raw.tests[t];
    if (test.id != t) {
      AddIssue(issues, IssueKind::kIdMismatch,
               "test at position " + std::to_string(t) + " has id " +
                   std::to_string(test.id),
               t);
    }
    if (test.cost < 1) {
      AddIssue(issues, IssueKind::kNonPositiveCost,
               "test " + std::to_string(t) + " has cost " +
                   std::to_string(test.cost),
               t);
    }
    if (static_cast<int>(test.outcomes.size()) != n) {
      AddIssue(issues, IssueKind::kOutcomeCountMismatch,
               "test " + std::to_string(t) + " has " +
                   std::to_string(test.outcomes.size()) + " outcomes for " +
                   std::to_string(n) + " objects",
               t);
      outcomes_well_formed = false;
      continue;
    }
    for (int s = 0; s < n; ++s) {
      const int o = test.outcomes[s];
      const bool out_of_range =
          o < 0 || (raw.num_outcomes > 0 && o >= raw.num_outcomes);
      if (out_of_range) {
        AddIssue(issues, IssueKind::kOutcomeOutOfRange,
                 "test " + std::to_string(t) + " gives outcome " +
                     std::to_string(o) + " on object " + std::to_string(s),
                 t, s);
        outcomes_well_formed = false;
      }
      max_outcome = std::max(max_outcome, o);
    }
  }

  const bool classes_well_formed =
      std::none_of(issues.begin(), issues.end(), [](const ValidationIssue& i) {
        return i.kind == IssueKind::kClassOutOfRange;
      });
  if (outcomes_well_formed && classes_well_formed) {
    if (auto pair = FindInseparablePair(raw)) {
      AddIssue(issues, IssueKind::kInseparableCrossClassPair,
               "objects " + std::to_string(pair->first) + " and " +
                   std::to_string(pair->second) +
                   " are in different classes but no test separates them",
               pair->first, pair->second);
    }
  }

  if (!issues.empty()) return report;

  Instance inst;
  inst.num_classes_ = raw.num_classes;
  inst.num_outcomes_ =
      raw.num_outcomes > 0 ? raw.num_outcomes : max_outcome + 1;
  inst.objects_ = std::move(raw.objects);
  inst.tests_ = std::move(raw.tests);
  inst.all_ = SubsetMask::Full(n);
  inst.class_masks_.assign(inst.num_classes_, SubsetMask(n));
  for (const auto& obj : inst.objects_) inst.class_masks_[obj.class_id].insert(obj.id);
  inst.outcome_masks_.assign(
      inst.tests_.size(), std::vector<SubsetMask>(inst.num_outcomes_, SubsetMask(n)));
  for (const auto& test : inst.tests_) {
    for (int s = 0; s < n; ++s) inst.outcome_masks_[test.id][test.outcomes[s]].insert(s);
  }
  BigInt lcm = 1;
  for (const auto& obj : inst.objects_) {
    lcm = boost::multiprecision::lcm(lcm,
                                     boost::multiprecision::denominator(obj.prob));
  }
  inst.denominator_ = lcm;
  inst.weights_.reserve(n);
  for (const auto& obj : inst.objects_) {
    inst.weights_.push_back(boost::multiprecision::numerator(obj.prob) *
                            (lcm / boost::multiprecision::denominator(obj.prob)));
  }
  report.instance = std::move(inst);
  return report;
}

Instance ValidateOrThrow(RawInstance raw) {
  auto report = Validate(std::move(raw));
  if (!report.ok()) throw Error(ErrorCode::kInvalidInstance, report.Summary());
  return std::move(*report.instance);
}

BigInt Instance::Weight(const SubsetMask& set) const {
  BigInt total = 0;
  set.ForEach([&](int s) { total += weights_[s]; });
  return total;
}

Rational Instance::Probability(const SubsetMask& set) const {
  return Rational(Weight(set), denominator_);
}

Cost Instance::TotalCost() const {
  Cost total = 0;
  for (const auto& t : tests_) total += t.cost;
  return total;
}

std::vector<int> Instance::AllTests() const {
  std::vector<int> ids(tests_.size());
  std::iota(ids.begin(), ids.end(), 0);
  return ids;
}

RawInstance Instance::ToRaw() const {
  RawInstance raw;
  raw.num_classes = num_classes_;
  raw.num_outcomes = num_outcomes_;
  raw.objects = objects_;
  raw.tests = tests_;
  return raw;
}

}  // namespace dfep
