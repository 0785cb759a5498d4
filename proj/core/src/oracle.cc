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

#include "dfep/oracle.h"

#include <bit>
#include <unordered_map>

#include "dfep/error.h"
#include "dfep/pairs.h"

namespace dfep {

namespace {

using Word = std::uint64_t;

void RequireObjects(int count, const OracleLimits& limits) {
  if (count > limits.max_objects || count > 64) {
    throw Error(ErrorCode::kInstanceTooLarge,
                std::to_string(count) + " objects exceed the oracle limit of " +
                    std::to_string(std::min(limits.max_objects, 64)));
  }
}

void RequireTests(int count, const OracleLimits& limits) {
  if (count > limits.max_tests || count > 30) {
    throw Error(ErrorCode::kInstanceTooLarge,
                std::to_string(count) + " tests exceed the oracle limit of " +
                    std::to_string(std::min(limits.max_tests, 30)));
  }
}

// The instance flattened to 64-bit object masks.
class Compact {
 public:
  explicit Compact(const Instance& inst) : inst_(inst) {
    for (int c = 0; c < inst.num_classes(); ++c) {
      classes_.push_back(inst.class_mask(c).LowWord());
    }
    outcomes_.resize(inst.num_tests());
    for (int t = 0; t < inst.num_tests(); ++t) {
      for (int o = 0; o < inst.num_outcomes(); ++o) {
        const Word w = inst.outcome_mask(t, o).LowWord();
        if (w != 0) outcomes_[t].push_back(w);
      }
    }
  }

  PairCount Pairs(Word g) const {
    PairCount size = 0, squares = 0;
    for (Word c : classes_) {
      const PairCount k = std::popcount(g & c);
      size += k;
      squares += k * k;
    }
    return (size * size - squares) / 2;
  }

  BigInt Weight(Word g) const {
    BigInt total = 0;
    while (g != 0) {
      total += inst_.weight(std::countr_zero(g));
      g &= g - 1;
    }
    return total;
  }

  // Nonempty cells of g under t, or empty when t does not split g.
  std::vector<Word> Cells(int t, Word g) const {
    std::vector<Word> cells;
    for (Word o : outcomes_[t]) {
      if (g & o) cells.push_back(g & o);
    }
    if (cells.size() < 2) cells.clear();
    return cells;
  }

  SubsetMask ToMask(Word g) const {
    return SubsetMask::FromWord(inst_.num_objects(), g);
  }

 private:
  const Instance& inst_;
  std::vector<Word> classes_;
  std::vector<std::vector<Word>> outcomes_;
};

// Memoized optimal-tree recursion shared by the expected and worst variants.
// Value(G) = 0 when P(G) = 0, else the minimum over tests t splitting G of
// Combine(t, G, values of the cells).
template <typename Value, typename Combine>
class TreeOracle {
 public:
  TreeOracle(const Instance& inst, Combine combine)
      : inst_(inst), compact_(inst), combine_(std::move(combine)) {}

  const Value& Solve(Word g) {
    if (auto it = memo_.find(g); it != memo_.end()) return it->second.value;
    Entry entry;
    if (compact_.Pairs(g) > 0) {
      for (int t = 0; t < inst_.num_tests(); ++t) {
        const auto cells = compact_.Cells(t, g);
        if (cells.empty()) continue;
        std::vector<Value> parts;
        parts.reserve(cells.size());
        for (Word cell : cells) parts.push_back(Solve(cell));
        Value candidate = combine_(t, g, parts);
        if (entry.best_test < 0 || candidate < entry.value) {
          entry.value = std::move(candidate);
          entry.best_test = t;
        }
      }
      DFEP_CHECK(entry.best_test >= 0,
                 "no test splits an object set that still has pairs");
    }
    return memo_.emplace(g, std::move(entry)).first->second.value;
  }

  // Rebuilds the argmin tree below g into `tree`; returns the subtree root.
  NodeId Witness(Word g, DecisionTree& tree) const {
    const Entry& entry = memo_.at(g);
    if (entry.best_test < 0) {
      const int first = std::countr_zero(g);
      return tree.AddLeaf(inst_.class_of(first), compact_.ToMask(g));
    }
    const NodeId id = tree.AddTest(entry.best_test);
    for (Word cell : compact_.Cells(entry.best_test, g)) {
      const int outcome = inst_.outcome(entry.best_test, std::countr_zero(cell));
      tree.AddChild(id, outcome, Witness(cell, tree));
    }
    return id;
  }

  std::uint64_t explored() const { return memo_.size(); }

 private:
  struct Entry {
    Value value{};
    int best_test = -1;
  };
  const Instance& inst_;
  Compact compact_;
  Combine combine_;
  std::unordered_map<Word, Entry> memo_;
};

template <typename Value, typename Combine, typename ToRational>
OracleResult RunTreeOracle(const Instance& inst, const SubsetMask& objects,
                           const OracleLimits& limits, Combine combine,
                           ToRational to_rational) {
  RequireObjects(objects.count(), limits);
  RequireObjects(inst.num_objects(), {64, 0});
  DFEP_CHECK(!objects.empty(), "oracle on an empty object set");
  TreeOracle<Value, Combine> oracle(inst, std::move(combine));
  const Word g = objects.LowWord();
  OracleResult result;
  result.value = to_rational(oracle.Solve(g));
  DecisionTree tree;
  tree.set_root(oracle.Witness(g, tree));
  result.tree = std::move(tree);
  result.explored = oracle.explored();
  return result;
}

}  // namespace

OracleResult OptExpected(const Instance& inst, const SubsetMask& objects,
                         const OracleLimits& limits) {
  Compact compact(inst);
  // Values are weight units: cost times probability numerator.
  auto combine = [&inst, compact](int t, Word g, const std::vector<BigInt>& parts) {
    BigInt total = compact.Weight(g) * inst.cost(t);
    for (const auto& p : parts) total += p;
    return total;
  };
  return RunTreeOracle<BigInt>(inst, objects, limits, combine,
                               [&inst](const BigInt& v) {
                                 return Rational(v, inst.weight_denominator());
                               });
}

OracleResult OptExpected(const Instance& inst, const OracleLimits& limits) {
  return OptExpected(inst, inst.all(), limits);
}

OracleResult OptWorst(const Instance& inst, const SubsetMask& objects,
                      const OracleLimits& limits) {
  auto combine = [&inst](int t, Word, const std::vector<Cost>& parts) {
    Cost worst = 0;
    for (Cost p : parts) worst = std::max(worst, p);
    return inst.cost(t) + worst;
  };
  return RunTreeOracle<Cost>(inst, objects, limits, combine,
                             [](Cost v) { return Rational(v); });
}

OracleResult OptWorst(const Instance& inst, const OracleLimits& limits) {
  return OptWorst(inst, inst.all(), limits);
}

namespace {

// Per-test data on S for the subset-enumeration oracles.
struct TestTable {
  std::vector<Word> star;
  std::vector<Word> sigma;
  std::vector<Cost> cost;
};

TestTable MakeTestTable(const Instance& inst) {
  TestTable table;
  for (int t = 0; t < inst.num_tests(); ++t) {
    const StarSigma ss = StarAndSigma(inst, t, inst.all());
    table.star.push_back(ss.star.LowWord());
    table.sigma.push_back(ss.sigma.LowWord());
    table.cost.push_back(inst.cost(t));
  }
  return table;
}

std::vector<int> MaskToTests(Word mask) {
  std::vector<int> tests;
  while (mask != 0) {
    tests.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return tests;
}

}  // namespace

OracleResult TotCostStar(const Instance& inst, const OracleLimits& limits) {
  RequireTests(inst.num_tests(), limits);
  RequireObjects(inst.num_objects(), {64, 0});
  const Compact compact(inst);
  const TestTable table = MakeTestTable(inst);
  const int k = inst.num_tests();
  const Word states = Word{1} << k;

  std::vector<Word> inter(states);
  std::vector<Cost> cost(states);
  inter[0] = inst.all().LowWord();
  cost[0] = 0;
  std::optional<Word> best;
  for (Word a = 0; a < states; ++a) {
    if (a != 0) {
      const int low = std::countr_zero(a);
      const Word rest = a & (a - 1);
      inter[a] = inter[rest] & table.star[low];
      cost[a] = cost[rest] + table.cost[low];
    }
    if ((!best || cost[a] < cost[*best]) && compact.Pairs(inter[a]) == 0) {
      best = a;
    }
  }
  DFEP_CHECK(best.has_value(), "the full test set leaves pairs uncovered");
  OracleResult result;
  result.value = Rational(cost[*best]);
  result.sequence = MaskToTests(*best);
  result.explored = states;
  return result;
}

OracleResult SepCostStar(const Instance& inst, const OracleLimits& limits) {
  RequireTests(inst.num_tests(), limits);
  RequireObjects(inst.num_objects(), {64, 0});
  const Compact compact(inst);
  const TestTable table = MakeTestTable(inst);
  const Word all = inst.all().LowWord();
  OracleResult result;
  if (compact.Pairs(all) == 0) {
    result.value = 0;
    return result;
  }

  const int k = inst.num_tests();
  const Word states = Word{1} << k;
  // For every test set A: covered objects, star intersection, total cost,
  // and g[A] = min over orderings of A of the prefix charges paid by the
  // objects A covers.
  std::vector<Word> covered(states), inter(states);
  std::vector<Cost> cost(states);
  std::vector<BigInt> g(states);
  std::vector<int> last(states, -1);
  covered[0] = 0;
  inter[0] = all;
  for (Word a = 1; a < states; ++a) {
    const int low = std::countr_zero(a);
    const Word rest = a & (a - 1);
    covered[a] = covered[rest] | table.sigma[low];
    inter[a] = inter[rest] & table.star[low];
    cost[a] = cost[rest] + table.cost[low];
    for (Word bits = a; bits != 0; bits &= bits - 1) {
      const int t = std::countr_zero(bits);
      const Word prev = a & ~(Word{1} << t);
      BigInt candidate =
          g[prev] + compact.Weight(table.sigma[t] & ~covered[prev]) * cost[a];
      if (last[a] < 0 || candidate < g[a]) {
        g[a] = std::move(candidate);
        last[a] = t;
      }
    }
  }

  // The final test of a sequence charges everyone not covered before it.
  const BigInt total_weight = compact.Weight(all);
  std::optional<BigInt> best;
  Word best_set = 0;
  int best_last = -1;
  for (Word a = 1; a < states; ++a) {
    if (compact.Pairs(inter[a]) != 0) continue;
    for (Word bits = a; bits != 0; bits &= bits - 1) {
      const int t = std::countr_zero(bits);
      const Word prev = a & ~(Word{1} << t);
      BigInt candidate =
          g[prev] + (total_weight - compact.Weight(covered[prev])) * cost[a];
      if (!best || candidate < *best) {
        best = std::move(candidate);
        best_set = a;
        best_last = t;
      }
    }
  }
  DFEP_CHECK(best.has_value(), "the full test set leaves pairs uncovered");

  std::vector<int> order;
  for (Word a = best_set & ~(Word{1} << best_last); a != 0;) {
    order.push_back(last[a]);
    a &= ~(Word{1} << last[a]);
  }
  result.sequence.assign(order.rbegin(), order.rend());
  result.sequence.push_back(best_last);
  result.value = Rational(*best, inst.weight_denominator());
  result.explored = states;
  return result;
}

OracleResult BudgetedSubmodularOpt(const SubmodularObjective& f, Cost budget,
                                   const OracleLimits& limits) {
  const Instance& inst = f.instance();
  const auto tests = f.tests();
  RequireTests(static_cast<int>(tests.size()), limits);
  RequireObjects(inst.num_objects(), {64, 0});
  const int k = static_cast<int>(tests.size());
  const Word states = Word{1} << k;

  std::vector<Word> residual(states);
  std::vector<Cost> cost(states);
  residual[0] = f.ground().LowWord();
  const BigInt base = f.Measure(f.ground());
  BigInt best_units = 0;
  Word best_set = 0;
  for (Word a = 1; a < states; ++a) {
    const int low = std::countr_zero(a);
    const Word rest = a & (a - 1);
    residual[a] = residual[rest] & f.star(tests[low]).LowWord();
    cost[a] = cost[rest] + inst.cost(tests[low]);
    if (cost[a] > budget) continue;
    const BigInt units = base - f.Measure(SubsetMask::FromWord(inst.num_objects(), residual[a]));
    if (units > best_units) {
      best_units = units;
      best_set = a;
    }
  }
  OracleResult result;
  result.value = f.ToValue(best_units);
  for (int pos : MaskToTests(best_set)) result.sequence.push_back(tests[pos]);
  result.explored = states;
  return result;
}

}  // namespace dfep
