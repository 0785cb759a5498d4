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

#include "dfep/submodular.h"

#include <algorithm>
#include <map>

#include "dfep/error.h"

namespace dfep {

Rational Alpha() { return MakeRational(kAlphaNumerator, kAlphaDenominator); }

SubmodularObjective::SubmodularObjective(const Instance& inst,
                                         ObjectiveKind kind, SubsetMask ground,
                                         std::vector<int> tests)
    : inst_(&inst),
      kind_(kind),
      ground_(std::move(ground)),
      tests_(std::move(tests)),
      stars_(inst.num_tests()) {
  std::sort(tests_.begin(), tests_.end());
  DFEP_CHECK(std::adjacent_find(tests_.begin(), tests_.end()) == tests_.end(),
             "duplicate candidate test");
  for (int t : tests_) {
    DFEP_CHECK(t >= 0 && t < inst.num_tests(), "candidate test out of range");
    stars_[t] = StarAndSigma(inst, t, ground_).star;
  }
  scale_ = kind_ == ObjectiveKind::kPairCoverage ? BigInt(1)
                                                 : inst.weight_denominator();
}

SubmodularObjective SubmodularObjective::PairCoverage(const Instance& inst) {
  return SubmodularObjective(inst, ObjectiveKind::kPairCoverage, inst.all(),
                             inst.AllTests());
}

SubmodularObjective SubmodularObjective::ProbabilityCoverage(
    const Instance& inst) {
  return SubmodularObjective(inst, ObjectiveKind::kProbabilityCoverage,
                             inst.all(), inst.AllTests());
}

BigInt SubmodularObjective::Measure(const SubsetMask& set) const {
  if (kind_ == ObjectiveKind::kPairCoverage) return BigInt(CountPairs(*inst_, set));
  return inst_->Weight(set);
}

BigInt SubmodularObjective::Units(std::span<const int> r) const {
  SubsetMask residual = ground_;
  for (int t : r) {
    DFEP_CHECK(std::binary_search(tests_.begin(), tests_.end(), t),
               "test " + std::to_string(t) + " is not a candidate");
    residual &= stars_[t];
  }
  return Measure(ground_) - Measure(residual);
}

Rational SubmodularObjective::Evaluate(std::span<const int> r) const {
  return ToValue(Units(r));
}

GreedyTrace AdaptedGreedy(const SubmodularObjective& f, Cost budget) {
  DFEP_CHECK(budget >= 1, "budget must be positive");
  const Instance& inst = f.instance();
  GreedyTrace trace;
  trace.budget = budget;

  std::vector<int> remaining(f.tests().begin(), f.tests().end());
  SubsetMask residual = f.ground();
  BigInt residual_measure = f.Measure(residual);
  const BigInt total = residual_measure;
  BigInt value_before_last = 0;
  Cost spent = 0;

  while (true) {
    int best_pos = -1;
    BigInt best_gain = 0;
    Cost best_cost = 1;
    for (int pos = 0; pos < static_cast<int>(remaining.size()); ++pos) {
      const int t = remaining[pos];
      const Cost c = inst.cost(t);
      if (c > budget) continue;
      const BigInt gain = residual_measure - f.Measure(residual & f.star(t));
      // gain / c > best_gain / best_cost, exact; ascending ids keep ties low.
      if (best_pos < 0 || gain * best_cost > best_gain * c) {
        best_pos = pos;
        best_gain = gain;
        best_cost = c;
      }
    }
    if (best_pos < 0) {
      if (trace.sequence.empty()) {
        trace.empty_eligible = true;
        return trace;
      }
      break;
    }
    const int t = remaining[best_pos];
    remaining.erase(remaining.begin() + best_pos);
    value_before_last = total - residual_measure;
    residual &= f.star(t);
    residual_measure -= best_gain;
    spent += best_cost;
    trace.sequence.push_back(t);
    trace.gains.push_back(f.ToValue(best_gain));
    trace.cumulative_cost.push_back(spent);
    if (spent > budget || remaining.empty()) break;
  }

  const int last = trace.sequence.back();
  const BigInt last_alone = f.Units(std::span<const int>(&last, 1));
  trace.sequence_value = f.ToValue(total - residual_measure);
  if (last_alone >= value_before_last) {
    trace.returned = {last};
    trace.returned_last_only = true;
    trace.returned_value = f.ToValue(last_alone);
  } else {
    trace.returned.assign(trace.sequence.begin(), trace.sequence.end() - 1);
    trace.returned_value = f.ToValue(value_before_last);
  }
  return trace;
}

namespace {

class BudgetPredicate {
 public:
  BudgetPredicate(const Instance& inst, const SubsetMask& g,
                  std::span<const int> tests)
      : objective_(inst, ObjectiveKind::kPairCoverage, g,
                   std::vector<int>(tests.begin(), tests.end())),
        pairs_(CountPairs(inst, g)) {
    DFEP_CHECK(pairs_ >= 1, "budget search needs P(G) >= 1");
    for (int t : tests) max_budget_ += inst.cost(t);
  }

  Cost max_budget() const { return max_budget_; }
  int probes() const { return static_cast<int>(cache_.size()); }

  bool operator()(Cost budget) { return Meets(Run(budget)); }

  const GreedyTrace& Run(Cost budget) {
    auto it = cache_.find(budget);
    if (it == cache_.end()) {
      it = cache_.emplace(budget, AdaptedGreedy(objective_, budget)).first;
    }
    return it->second;
  }

 private:
  bool Meets(const GreedyTrace& trace) const {
    if (trace.empty_eligible) return false;
    const auto covered = boost::multiprecision::numerator(trace.returned_value);
    return MeetsAlpha(covered.convert_to<PairCount>(), pairs_);
  }

  SubmodularObjective objective_;
  PairCount pairs_ = 0;
  Cost max_budget_ = 0;
  std::map<Cost, GreedyTrace> cache_;
};

}  // namespace

BudgetSearch FindBudget(const Instance& inst, const SubsetMask& g,
                        std::span<const int> tests) {
  BudgetPredicate predicate(inst, g, tests);
  Cost lo = 1;
  Cost hi = predicate.max_budget();
  DFEP_CHECK(hi >= 1 && predicate(hi),
             "greedy never covers alpha * P(G) pairs (PredicateNeverTrue)");
  while (lo < hi) {
    const Cost mid = lo + (hi - lo) / 2;
    if (predicate(mid)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  BudgetSearch out;
  out.budget = lo;
  out.trace = predicate.Run(lo);
  out.probes = predicate.probes();
  return out;
}

BudgetSearch FindBudget(const Instance& inst) {
  const auto tests = inst.AllTests();
  return FindBudget(inst, inst.all(), tests);
}

BudgetSearch FindBudgetLinear(const Instance& inst, const SubsetMask& g,
                              std::span<const int> tests) {
  BudgetPredicate predicate(inst, g, tests);
  for (Cost b = 1; b <= predicate.max_budget(); ++b) {
    if (predicate(b)) {
      BudgetSearch out;
      out.budget = b;
      out.trace = predicate.Run(b);
      out.probes = predicate.probes();
      return out;
    }
  }
  ThrowInternal("greedy never covers alpha * P(G) pairs (PredicateNeverTrue)");
}

}  // namespace dfep
