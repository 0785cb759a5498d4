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

#include "dfep/generators.h"

#include <algorithm>
#include <map>
#include <set>

#include "dfep/error.h"
#include "json_util.h"

namespace dfep {

std::int64_t Rng::Uniform(std::int64_t lo, std::int64_t hi) {
  DFEP_CHECK(lo <= hi, "empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(Next());  // full range
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x;
  do {
    x = Next();
  } while (x >= limit);
  return lo + static_cast<std::int64_t>(x % span);
}

std::optional<ProbShape> ParseProbShape(std::string_view name) {
  if (name == "uniform") return ProbShape::kUniform;
  if (name == "dyadic") return ProbShape::kDyadic;
  if (name == "sparse") return ProbShape::kSparse;
  return std::nullopt;
}

std::string_view ProbShapeName(ProbShape shape) {
  switch (shape) {
    case ProbShape::kUniform: return "uniform";
    case ProbShape::kDyadic: return "dyadic";
    case ProbShape::kSparse: return "sparse";
  }
  return "?";
}

namespace {

constexpr int kDyadicBits = 12;

void RequireInput(bool ok, const std::string& message) {
  if (!ok) throw Error(ErrorCode::kInvalidInput, message);
}

// `count` positive multiples of 2^-kDyadicBits summing to 1.
std::vector<Rational> DyadicSplit(Rng& rng, int count) {
  const std::int64_t total = std::int64_t{1} << kDyadicBits;
  std::set<std::int64_t> cuts;
  while (static_cast<int>(cuts.size()) < count - 1) {
    cuts.insert(rng.Uniform(1, total - 1));
  }
  std::vector<Rational> probs;
  std::int64_t prev = 0;
  for (std::int64_t cut : cuts) {
    probs.push_back(MakeRational(cut - prev, total));
    prev = cut;
  }
  probs.push_back(MakeRational(total - prev, total));
  return probs;
}

std::vector<Rational> DrawProbabilities(Rng& rng, int n, ProbShape shape) {
  switch (shape) {
    case ProbShape::kUniform:
      return std::vector<Rational>(n, MakeRational(1, n));
    case ProbShape::kDyadic:
      return DyadicSplit(rng, n);
    case ProbShape::kSparse: {
      std::vector<int> order(n);
      for (int i = 0; i < n; ++i) order[i] = i;
      rng.Shuffle(order);
      const int support = static_cast<int>(rng.Uniform(1, n));
      const auto mass = DyadicSplit(rng, support);
      std::vector<Rational> probs(n, Rational(0));
      for (int k = 0; k < support; ++k) probs[order[k]] = mass[k];
      return probs;
    }
  }
  return {};
}

bool CrossClassSeparable(const std::vector<int>& classes,
                         const std::vector<TestRecord>& tests) {
  std::map<std::vector<int>, int> seen;  // outcome row -> class
  for (std::size_t s = 0; s < classes.size(); ++s) {
    std::vector<int> row;
    row.reserve(tests.size());
    for (const auto& t : tests) row.push_back(t.outcomes[s]);
    auto [it, inserted] = seen.emplace(std::move(row), classes[s]);
    if (!inserted && it->second != classes[s]) return false;
  }
  return true;
}

}  // namespace

Instance GenRandom(const RandomParams& p) {
  RequireInput(p.num_objects >= 1, "need at least one object");
  RequireInput(p.num_objects < (1 << kDyadicBits), "too many objects");
  RequireInput(p.num_classes >= 1 && p.num_classes <= p.num_objects,
               "need 1 <= classes <= objects");
  RequireInput(p.num_tests >= 1, "need at least one test");
  RequireInput(p.num_outcomes >= 1, "need at least one outcome");
  RequireInput(p.max_cost >= 1, "max cost must be positive");
  RequireInput(p.max_attempts >= 1, "need at least one attempt");

  Rng rng(p.seed);
  const int n = p.num_objects;

  // A random permutation hands out one object per class, the rest at random.
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  rng.Shuffle(order);
  std::vector<int> classes(n);
  for (int k = 0; k < n; ++k) {
    classes[order[k]] = k < p.num_classes
                            ? k
                            : static_cast<int>(rng.Uniform(0, p.num_classes - 1));
  }
  const auto probs = DrawProbabilities(rng, n, p.prob_shape);

  RawInstance raw;
  raw.num_classes = p.num_classes;
  raw.num_outcomes = p.num_outcomes;
  for (int s = 0; s < n; ++s) raw.objects.push_back({s, classes[s], probs[s]});
  for (int t = 0; t < p.num_tests; ++t) {
    raw.tests.push_back({t, rng.Uniform(1, p.max_cost), std::vector<int>(n)});
  }
  for (int attempt = 0; attempt < p.max_attempts; ++attempt) {
    for (auto& test : raw.tests) {
      for (int& o : test.outcomes) {
        o = static_cast<int>(rng.Uniform(0, p.num_outcomes - 1));
      }
    }
    if (CrossClassSeparable(classes, raw.tests)) return ValidateOrThrow(raw);
  }
  throw Error(ErrorCode::kSeparabilityUnreachable,
              "no cross-class separable outcome matrix after " +
                  std::to_string(p.max_attempts) + " attempts");
}

Instance GenIdentificationDichotomy(int n, int max_n) {
  RequireInput(n >= 2, "identification instance needs n >= 2");
  if (n > max_n || n > 30) {
    throw Error(ErrorCode::kInstanceTooLarge,
                "n = " + std::to_string(n) + " exceeds the cap of " +
                    std::to_string(std::min(max_n, 30)) + " (2^n tests)");
  }
  RawInstance raw;
  raw.num_classes = n;
  raw.num_outcomes = 2;
  for (int i = 0; i < n; ++i) {
    const int exponent = i + 1 < n ? i + 1 : n - 1;
    raw.objects.push_back({i, i, Rational(BigInt(1), BigInt(1) << exponent)});
  }
  const std::int64_t patterns = std::int64_t{1} << n;
  for (std::int64_t b = 1; b + 1 < patterns; ++b) {
    TestRecord test{static_cast<int>(b - 1), 1, std::vector<int>(n)};
    for (int s = 0; s < n; ++s) test.outcomes[s] = static_cast<int>((b >> s) & 1);
    raw.tests.push_back(std::move(test));
  }
  return ValidateOrThrow(std::move(raw));
}

bool SetCoverInstance::Feasible() const {
  std::vector<bool> hit(universe, false);
  for (const auto& set : sets) {
    for (int u : set) {
      if (u >= 0 && u < universe) hit[u] = true;
    }
  }
  return std::all_of(hit.begin(), hit.end(), [](bool h) { return h; });
}

SetCoverInstance ParseSetCoverJson(std::string_view text) {
  using json_util::Json;
  const Json j = json_util::Parse(text);
  json_util::RequireKeys(j, "set cover", {"universe", "sets"});
  SetCoverInstance sc;
  sc.universe = json_util::GetInt(j, "universe", "set cover");
  RequireInput(sc.universe >= 1, "set cover universe must be positive");
  const Json& sets = json_util::GetArray(j, "sets", "set cover");
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const std::string where = "set cover.sets[" + std::to_string(i) + "]";
    RequireInput(sets[i].is_array(), where + " must be an array");
    std::vector<int> set;
    for (const auto& v : sets[i]) {
      const auto u = json_util::AsInt64(v, where);
      RequireInput(u >= 0 && u < sc.universe, where + " has an element out of range");
      set.push_back(static_cast<int>(u));
    }
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    sc.sets.push_back(std::move(set));
  }
  return sc;
}

std::string SetCoverToJson(const SetCoverInstance& sc) {
  std::string out = "{\n  \"universe\": " + std::to_string(sc.universe) +
                    ",\n  \"sets\": [";
  for (std::size_t i = 0; i < sc.sets.size(); ++i) {
    out += i == 0 ? "\n    [" : ",\n    [";
    for (std::size_t k = 0; k < sc.sets[i].size(); ++k) {
      if (k > 0) out += ", ";
      out += std::to_string(sc.sets[i][k]);
    }
    out += "]";
  }
  out += sc.sets.empty() ? "]\n}\n" : "\n  ]\n}\n";
  return out;
}

std::vector<int> MinimumSetCover(const SetCoverInstance& sc) {
  if (!sc.Feasible()) {
    throw Error(ErrorCode::kInfeasibleCover, "the sets do not cover the universe");
  }
  const int k = static_cast<int>(sc.sets.size());
  if (k > 25 || sc.universe > 64) {
    throw Error(ErrorCode::kInstanceTooLarge, "set cover too large to enumerate");
  }
  const std::uint64_t full =
      sc.universe == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << sc.universe) - 1;
  std::vector<std::uint64_t> masks;
  for (const auto& set : sc.sets) {
    std::uint64_t m = 0;
    for (int u : set) m |= std::uint64_t{1} << u;
    masks.push_back(m);
  }
  // Combinations of each size in lexicographic order.
  for (int size = 0; size <= k; ++size) {
    std::vector<int> pick(size);
    for (int i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      std::uint64_t covered = 0;
      for (int i : pick) covered |= masks[i];
      if (covered == full) return pick;
      int pos = size - 1;
      while (pos >= 0 && pick[pos] == k - size + pos) --pos;
      if (pos < 0) break;
      ++pick[pos];
      for (int i = pos + 1; i < size; ++i) pick[i] = pick[i - 1] + 1;
    }
  }
  ThrowInternal("feasible set cover without a cover");
}

SetCoverInstance RandomSetCover(std::uint64_t seed, int universe, int num_sets) {
  RequireInput(universe >= 1, "universe must be positive");
  RequireInput(num_sets >= 1, "need at least one set");
  Rng rng(seed);
  SetCoverInstance sc;
  sc.universe = universe;
  std::vector<std::set<int>> sets(num_sets);
  for (auto& set : sets) {
    for (int u = 0; u < universe; ++u) {
      if (rng.Uniform(0, 2) == 0) set.insert(u);
    }
    if (set.empty()) set.insert(static_cast<int>(rng.Uniform(0, universe - 1)));
  }
  for (int u = 0; u < universe; ++u) {
    const bool hit = std::any_of(sets.begin(), sets.end(),
                                 [u](const auto& set) { return set.count(u) > 0; });
    if (!hit) sets[rng.Uniform(0, num_sets - 1)].insert(u);
  }
  for (const auto& set : sets) sc.sets.emplace_back(set.begin(), set.end());
  return sc;
}

Rational DefaultEta(int universe, int b) {
  return MakeRational(1, 2 * (universe + b - 2) + 2);
}

ReductionInstance GenSetCoverReduction(const SetCoverInstance& sc, int b,
                                       std::optional<Rational> eta) {
  RequireInput(b >= 2, "reduction needs b >= 2");
  RequireInput(sc.universe >= 1, "reduction needs a nonempty universe");
  for (const auto& set : sc.sets) {
    for (int u : set) {
      RequireInput(u >= 0 && u < sc.universe, "set element out of range");
    }
  }
  if (!sc.Feasible()) {
    throw Error(ErrorCode::kInfeasibleCover,
                "the sets do not cover the universe; o_1 would be inseparable");
  }
  const int n = sc.universe;
  const int others = n + b - 2;
  const Rational e = eta.value_or(DefaultEta(n, b));
  RequireInput(e > 0 && e * 2 * others < 1,
               "eta must satisfy 0 < eta < 1/(2(n+b-2))");

  RawInstance raw;
  raw.num_classes = b;
  raw.num_outcomes = std::max(2, b - 1);
  for (int u = 0; u < n; ++u) raw.objects.push_back({u, 0, e});
  for (int i = 1; i < b; ++i) {
    raw.objects.push_back({n + i - 1, i, i == 1 ? Rational(1 - others * e) : e});
  }
  const int total = n + b - 1;
  for (std::size_t j = 0; j < sc.sets.size(); ++j) {
    TestRecord test{static_cast<int>(j), 1, std::vector<int>(total, 1)};
    for (int u : sc.sets[j]) test.outcomes[u] = 0;
    raw.tests.push_back(std::move(test));
  }
  TestRecord tilde{static_cast<int>(sc.sets.size()), 1, std::vector<int>(total, 0)};
  for (int i = 1; i < b; ++i) tilde.outcomes[n + i - 1] = i - 1;
  raw.tests.push_back(std::move(tilde));

  ReductionInstance red{ValidateOrThrow(std::move(raw)), sc, b, e,
                        static_cast<int>(sc.sets.size()), n};
  return red;
}

DecisionTree ReductionChainTree(const ReductionInstance& red,
                                const std::vector<int>& cover) {
  const Instance& inst = red.instance;
  const int n = red.cover.universe;
  DecisionTree tree;
  SubsetMask rest = inst.all();
  NodeId parent = -1;
  int parent_outcome = 1;
  auto attach = [&](NodeId child) {
    if (parent < 0) {
      tree.set_root(child);
    } else {
      tree.AddChild(parent, parent_outcome, child);
    }
  };
  for (int j : cover) {
    RequireInput(j >= 0 && j < static_cast<int>(red.cover.sets.size()),
                 "cover index out of range");
    const NodeId node = tree.AddTest(j);
    attach(node);
    const SubsetMask hit = rest & inst.outcome_mask(j, 0);
    if (!hit.empty()) tree.AddChild(node, 0, tree.AddLeaf(0, hit));
    rest -= hit;
    parent = node;
    parent_outcome = 1;
  }
  for (int u = 0; u < n; ++u) {
    RequireInput(!rest.contains(u), "the given sets do not cover the universe");
  }
  const NodeId tilde = tree.AddTest(red.tilde_test);
  attach(tilde);
  rest.ForEach([&](int s) {
    SubsetMask only = inst.Empty();
    only.insert(s);
    tree.AddChild(tilde, inst.outcome(red.tilde_test, s),
                  tree.AddLeaf(inst.class_of(s), std::move(only)));
  });
  return tree;
}

ExtractedCover ExtractCover(const DecisionTree& tree,
                            const ReductionInstance& red) {
  const Instance& inst = red.instance;
  if (const auto problems = CheckTree(tree, inst); !problems.empty()) {
    throw Error(ErrorCode::kTreeMismatch,
                "not a decision tree for the reduction instance: " + problems.front());
  }
  ExtractedCover out;
  std::vector<bool> covered(red.cover.universe, false);
  for (int t : Classify(tree, inst, red.o1).path) {
    if (t == red.tilde_test) continue;
    out.sets.push_back(t);
    for (int u : red.cover.sets[t]) covered[u] = true;
  }
  DFEP_CHECK(std::all_of(covered.begin(), covered.end(), [](bool c) { return c; }),
             "NotACover: the tests on o_1's path miss a universe element");
  const CostReport costs = TreeCosts(tree, inst);
  out.worst = costs.worst;
  out.expected = costs.expected;
  const auto size = static_cast<Cost>(out.sets.size());
  DFEP_CHECK(size <= out.worst, "extracted cover larger than cost_W");
  DFEP_CHECK(Rational(size) <= 2 * out.expected,
             "extracted cover larger than 2 cost_E");
  return out;
}

}  // namespace dfep
