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

// Coverage objectives over sets of tests and Wolsey's adapted greedy for
// maximizing them under a knapsack budget.
//
// For a ground set U and tests R, with stars taken on U:
//   pair coverage         f1(R) = P(U) - P(U ∩ ⋂_{t∈R} star(t))
//   probability coverage  f2(R) = p(U) - p(U ∩ ⋂_{t∈R} star(t))
// Both are nonnegative, nondecreasing and submodular.

#ifndef DFEP_SUBMODULAR_H_
#define DFEP_SUBMODULAR_H_

#include <optional>
#include <span>
#include <vector>

#include "dfep/instance.h"
#include "dfep/pairs.h"
#include "dfep/rational.h"

namespace dfep {

// Coverage fraction demanded of the greedy by the budget search: 7/20, a
// rational just below Wolsey's constant 1 - e^{-chi} ≈ 0.3574 where
// e^chi = 2 - chi.
inline constexpr std::int64_t kAlphaNumerator = 7;
inline constexpr std::int64_t kAlphaDenominator = 20;
Rational Alpha();

// covered >= alpha * total, compared exactly.
inline bool MeetsAlpha(PairCount covered, PairCount total) {
  return kAlphaDenominator * covered >= kAlphaNumerator * total;
}

// covered >= alpha^2 * total, i.e. 400 * covered >= 49 * total.
inline bool MeetsAlphaSquared(PairCount covered, PairCount total) {
  return kAlphaDenominator * kAlphaDenominator * covered >=
         kAlphaNumerator * kAlphaNumerator * total;
}

enum class ObjectiveKind { kPairCoverage, kProbabilityCoverage };

class SubmodularObjective {
 public:
  // `tests` are the candidate tests (the function's ground set of tests);
  // stars are computed on `ground`.
  SubmodularObjective(const Instance& inst, ObjectiveKind kind,
                      SubsetMask ground, std::vector<int> tests);

  static SubmodularObjective PairCoverage(const Instance& inst);
  static SubmodularObjective ProbabilityCoverage(const Instance& inst);

  const Instance& instance() const { return *inst_; }
  ObjectiveKind kind() const { return kind_; }
  const SubsetMask& ground() const { return ground_; }
  std::span<const int> tests() const { return tests_; }
  const SubsetMask& star(int t) const { return stars_[t]; }

  // Values are integers in "units": pairs for f1, probability weight
  // numerators (over instance().weight_denominator()) for f2.
  BigInt Units(std::span<const int> r) const;
  // Units of the ground objects that lie in every star of R, i.e. the
  // uncovered part; f = Measure(ground) - Measure(residual).
  BigInt Measure(const SubsetMask& set) const;
  const BigInt& scale() const { return scale_; }

  Rational Evaluate(std::span<const int> r) const;
  Rational ToValue(const BigInt& units) const { return Rational(units, scale_); }

 private:
  const Instance* inst_;
  ObjectiveKind kind_;
  SubsetMask ground_;
  std::vector<int> tests_;
  std::vector<SubsetMask> stars_;  // indexed by test id
  BigInt scale_;
};

struct GreedyTrace {
  Cost budget = 0;
  std::vector<int> sequence;            // t_1..t_k in selection order
  std::vector<Rational> gains;          // f(A + t_j) - f(A) at pick j
  std::vector<Cost> cumulative_cost;    // cost of t_1..t_j
  std::vector<int> returned;            // {t_k} or {t_1..t_{k-1}}
  bool returned_last_only = false;
  // No test had c(t) <= budget at the first iteration.
  bool empty_eligible = false;

  Rational returned_value;
  Rational sequence_value;

  Cost SequenceCost() const {
    return cumulative_cost.empty() ? 0 : cumulative_cost.back();
  }
};

// Repeats: pick the eligible test (c(t) <= budget) of largest
// gain/cost, ties to the lowest id; until the spend exceeds the budget or
// no candidate is left. Returns {t_k} if f({t_k}) >= f(A \ {t_k}), else
// {t_1..t_{k-1}}.
GreedyTrace AdaptedGreedy(const SubmodularObjective& f, Cost budget);

struct BudgetSearch {
  Cost budget = 0;
  GreedyTrace trace;       // the greedy run at `budget`
  int probes = 0;          // greedy runs performed
};

// Smallest integer budget in [1, sum of costs] at which AdaptedGreedy on
// pair coverage returns a set covering at least alpha * P(G) pairs, found by
// binary search. Requires P(G) >= 1.
BudgetSearch FindBudget(const Instance& inst, const SubsetMask& g,
                        std::span<const int> tests);
BudgetSearch FindBudget(const Instance& inst);

// Same predicate, scanned linearly; the true minimum. Binary search relies
// on the predicate being monotone in the budget, which is not guaranteed.
BudgetSearch FindBudgetLinear(const Instance& inst, const SubsetMask& g,
                              std::span<const int> tests);

}  // namespace dfep

#endif  // DFEP_SUBMODULAR_H_
