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

#include "brute.h"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>

namespace dfep::testing {

Objects AllObjects(const Instance& inst) {
  Objects out;
  for (int s = 0; s < inst.num_objects(); ++s) out.push_back(s);
  return out;
}

Objects MaskObjects(const SubsetMask& mask) { return mask.Indices(); }

std::int64_t BrutePairs(const Instance& inst, const Objects& g) {
  std::int64_t pairs = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (inst.object(g[i]).class_id != inst.object(g[j]).class_id) ++pairs;
    }
  }
  return pairs;
}

namespace {

std::map<int, Objects> Cells(const Instance& inst, int t, const Objects& g) {
  std::map<int, Objects> cells;
  for (int s : g) cells[inst.test(t).outcomes[s]].push_back(s);
  return cells;
}

bool Contains(const Objects& set, int s) {
  return std::find(set.begin(), set.end(), s) != set.end();
}

}  // namespace

Objects BruteStar(const Instance& inst, int t, const Objects& g) {
  Objects best;
  std::int64_t best_pairs = -1;
  for (const auto& [outcome, cell] : Cells(inst, t, g)) {
    const std::int64_t p = BrutePairs(inst, cell);
    if (p > best_pairs) {
      best_pairs = p;
      best = cell;
    }
  }
  return best;
}

BrutePairClasses BruteClassifyPairs(const Instance& inst, int t, const Objects& g) {
  const Objects star = BruteStar(inst, t, g);
  BrutePairClasses out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (inst.object(g[i]).class_id == inst.object(g[j]).class_id) continue;
      const int in_star = Contains(star, g[i]) + Contains(star, g[j]);
      if (in_star == 2) {
        ++out.uncovered;
      } else if (in_star == 0) {
        ++out.kept;
      } else {
        ++out.separated;
      }
    }
  }
  return out;
}

Rational SimulatedSepCost(const Instance& inst, const std::vector<int>& seq,
                          const Objects& g) {
  if (seq.empty()) throw std::invalid_argument("empty sequence");
  std::vector<Objects> stars;
  for (int t : seq) stars.push_back(BruteStar(inst, t, g));
  Rational total = 0;
  for (int s : g) {
    Cost paid = 0;
    std::size_t j = 0;
    for (; j < seq.size(); ++j) {
      paid += inst.test(seq[j]).cost;
      if (j + 1 < seq.size() && !Contains(stars[j], s)) break;
    }
    total += inst.object(s).prob * paid;
  }
  return total;
}

bool BruteCoversAllPairs(const Instance& inst, const std::vector<int>& seq,
                         const Objects& g) {
  std::vector<Objects> stars;
  for (int t : seq) stars.push_back(BruteStar(inst, t, g));
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (inst.object(g[i]).class_id == inst.object(g[j]).class_id) continue;
      bool covered = false;
      for (const auto& star : stars) {
        if (!Contains(star, g[i]) || !Contains(star, g[j])) covered = true;
      }
      if (!covered) return false;
    }
  }
  return true;
}

Rational FactorialSepCostStar(const Instance& inst) {
  const int k = inst.num_tests();
  if (k > 7) throw std::invalid_argument("too many tests for factorial search");
  const Objects all = AllObjects(inst);
  if (BrutePairs(inst, all) == 0) return 0;
  std::optional<Rational> best;
  for (int mask = 1; mask < (1 << k); ++mask) {
    std::vector<int> seq;
    for (int t = 0; t < k; ++t) {
      if (mask >> t & 1) seq.push_back(t);
    }
    if (!BruteCoversAllPairs(inst, seq, all)) continue;
    do {
      const Rational v = SimulatedSepCost(inst, seq, all);
      if (!best || v < *best) best = v;
    } while (std::next_permutation(seq.begin(), seq.end()));
  }
  return *best;
}

Cost BruteTotCostStar(const Instance& inst) {
  const int k = inst.num_tests();
  const Objects all = AllObjects(inst);
  if (BrutePairs(inst, all) == 0) return 0;
  std::optional<Cost> best;
  for (int mask = 1; mask < (1 << k); ++mask) {
    std::vector<int> seq;
    Cost total = 0;
    for (int t = 0; t < k; ++t) {
      if (mask >> t & 1) {
        seq.push_back(t);
        total += inst.test(t).cost;
      }
    }
    if (best && total >= *best) continue;
    if (BruteCoversAllPairs(inst, seq, all)) best = total;
  }
  return *best;
}

namespace {

template <typename Value, typename Combine>
std::optional<Value> BestSplit(const Instance& inst, const Objects& g,
                               Combine combine) {
  std::optional<Value> best;
  for (int t = 0; t < inst.num_tests(); ++t) {
    const auto cells = Cells(inst, t, g);
    if (cells.size() < 2) continue;
    Value v = combine(t, cells);
    if (!best || v < *best) best = v;
  }
  return best;
}

}  // namespace

Rational BruteOptExpected(const Instance& inst, const Objects& g) {
  if (BrutePairs(inst, g) == 0) return 0;
  Rational mass = 0;
  for (int s : g) mass += inst.object(s).prob;
  auto best = BestSplit<Rational>(inst, g, [&](int t, const auto& cells) {
    Rational v = mass * inst.test(t).cost;
    for (const auto& [o, cell] : cells) v += BruteOptExpected(inst, cell);
    return v;
  });
  if (!best) throw std::logic_error("unsplittable");
  return *best;
}

Cost BruteOptWorst(const Instance& inst, const Objects& g) {
  if (BrutePairs(inst, g) == 0) return 0;
  auto best = BestSplit<Cost>(inst, g, [&](int t, const auto& cells) {
    Cost worst = 0;
    for (const auto& [o, cell] : cells) worst = std::max(worst, BruteOptWorst(inst, cell));
    return inst.test(t).cost + worst;
  });
  if (!best) throw std::logic_error("unsplittable");
  return *best;
}

Route BruteRoute(const DecisionTree& tree, const Instance& inst, int s) {
  Route route;
  NodeId id = tree.root();
  for (int guard = 0; guard <= tree.size(); ++guard) {
    if (tree.is_leaf(id)) {
      route.class_id = tree.leaf_node(id).class_id;
      return route;
    }
    const auto& node = tree.test_node(id);
    route.tests.push_back(node.test);
    route.cost += inst.test(node.test).cost;
    const auto it = node.children.find(inst.test(node.test).outcomes[s]);
    if (it == node.children.end()) return route;  // class_id stays -1
    id = it->second;
  }
  return route;
}

Rational BruteCoverage(const Instance& inst, const Objects& g,
                       const std::vector<int>& r, bool pairs) {
  Objects residual = g;
  for (int t : r) {
    const Objects star = BruteStar(inst, t, g);
    Objects next;
    for (int s : residual) {
      if (Contains(star, s)) next.push_back(s);
    }
    residual = next;
  }
  if (pairs) return Rational(BrutePairs(inst, g) - BrutePairs(inst, residual));
  Rational covered = 0;
  for (int s : g) {
    if (!Contains(residual, s)) covered += inst.object(s).prob;
  }
  return covered;
}

Rational BruteBudgetedMax(const Instance& inst, const Objects& g,
                          const std::vector<int>& tests, Cost budget, bool pairs) {
  Rational best = 0;
  const int k = static_cast<int>(tests.size());
  for (int mask = 0; mask < (1 << k); ++mask) {
    std::vector<int> r;
    Cost total = 0;
    for (int i = 0; i < k; ++i) {
      if (mask >> i & 1) {
        r.push_back(tests[i]);
        total += inst.test(tests[i]).cost;
      }
    }
    if (total > budget) continue;
    best = std::max(best, BruteCoverage(inst, g, r, pairs));
  }
  return best;
}

int BruteSetCoverSize(const SetCoverInstance& sc) {
  const int k = static_cast<int>(sc.sets.size());
  int best = -1;
  for (int mask = 0; mask < (1 << k); ++mask) {
    std::vector<bool> hit(sc.universe, false);
    for (int i = 0; i < k; ++i) {
      if (mask >> i & 1) {
        for (int u : sc.sets[i]) hit[u] = true;
      }
    }
    if (std::all_of(hit.begin(), hit.end(), [](bool h) { return h; })) {
      const int size = __builtin_popcount(mask);
      if (best < 0 || size < best) best = size;
    }
  }
  return best;
}

RandomParams BatchParams(std::uint64_t seed, int max_objects) {
  Rng rng(seed * 0x9E3779B97F4A7C15ULL + 17);
  RandomParams p;
  p.seed = seed;
  p.num_objects = static_cast<int>(rng.Uniform(2, max_objects));
  // One seed in ten keeps the single-class case.
  p.num_classes = seed % 10 == 0 ? 1 : static_cast<int>(rng.Uniform(2, std::min(p.num_objects, 6)));
  p.num_tests = static_cast<int>(rng.Uniform(3, 8));
  p.num_outcomes = static_cast<int>(rng.Uniform(2, 3));
  // Enough distinct outcome vectors that a separable draw is likely.
  auto codes = [&p] {
    int c = 1;
    for (int i = 0; i < p.num_tests; ++i) c *= p.num_outcomes;
    return c;
  };
  while (codes() < 4 * p.num_classes) ++p.num_tests;
  p.max_cost = rng.Uniform(1, 5);
  static constexpr ProbShape kShapes[] = {ProbShape::kDyadic, ProbShape::kUniform,
                                          ProbShape::kSparse};
  p.prob_shape = kShapes[seed % 3];
  return p;
}

}  // namespace dfep::testing
