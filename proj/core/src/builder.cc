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

#include "dfep/builder.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <future>
#include <variant>

#include "dfep/error.h"
#include "dfep/pairs.h"
#include "dfep/submodular.h"

namespace dfep {

namespace {

struct Subtree {
  DecisionTree tree;
  std::vector<BackboneRecord> backbones;
};

// A subtree that is either already built or still running on a worker.
using PendingSubtree = std::variant<Subtree, std::future<Subtree>>;

Subtree Resolve(PendingSubtree& pending) {
  if (auto* ready = std::get_if<Subtree>(&pending)) return std::move(*ready);
  return std::get<std::future<Subtree>>(pending).get();
}

struct BackboneStep {
  int test = 0;
  int star_outcome = 0;
  std::vector<std::pair<int, std::size_t>> children;  // outcome, pending index
};

class DecTreeBuilder {
 public:
  DecTreeBuilder(const Instance& inst, int threads)
      : inst_(inst), spare_workers_(std::max(threads, 1) - 1) {}

  Subtree Run(const SubsetMask& g, std::vector<int> tests);

 private:
  PendingSubtree Spawn(SubsetMask g, std::vector<int> tests);
  Subtree Leaf(const SubsetMask& g) const;
  Subtree SinglePair(const SubsetMask& g, const std::vector<int>& tests) const;

  const Instance& inst_;
  std::atomic<int> spare_workers_;
};

PendingSubtree DecTreeBuilder::Spawn(SubsetMask g, std::vector<int> tests) {
  if (spare_workers_.fetch_sub(1) > 0) {
    return std::async(std::launch::async,
                      [this, g = std::move(g), tests = std::move(tests)]() mutable {
                        Subtree out = Run(g, std::move(tests));
                        spare_workers_.fetch_add(1);
                        return out;
                      });
  }
  spare_workers_.fetch_add(1);
  return Run(g, std::move(tests));
}

Subtree DecTreeBuilder::Leaf(const SubsetMask& g) const {
  return {DecisionTree::Leaf(inst_.class_of(g.First()), g), {}};
}

Subtree DecTreeBuilder::SinglePair(const SubsetMask& g,
                                   const std::vector<int>& tests) const {
  const int a = g.First();
  const int b = (g - SubsetMask::FromIndices(g.universe(), std::vector<int>{a})).First();
  int best = -1;
  for (int t : tests) {
    if (inst_.outcome(t, a) == inst_.outcome(t, b)) continue;
    if (best < 0 || inst_.cost(t) < inst_.cost(best)) best = t;
  }
  DFEP_CHECK(best >= 0, "Unsplittable: no remaining test separates objects " +
                            std::to_string(a) + " and " + std::to_string(b));
  Subtree out;
  const NodeId root = out.tree.AddTest(best);
  for (int s : {a, b}) {
    SubsetMask only(g.universe());
    only.insert(s);
    out.tree.AddChild(root, inst_.outcome(best, s),
                      out.tree.AddLeaf(inst_.class_of(s), std::move(only)));
  }
  out.tree.set_root(root);
  BackboneRecord record;
  record.objects = g;
  record.pairs = 1;
  out.backbones.push_back(std::move(record));
  return out;
}

Subtree DecTreeBuilder::Run(const SubsetMask& g, std::vector<int> tests) {
  const PairCount pairs = CountPairs(inst_, g);
  if (pairs == 0) return Leaf(g);
  if (pairs == 1) return SinglePair(g, tests);

  std::sort(tests.begin(), tests.end());
  const Cost budget = FindBudget(inst_, g, tests).budget;

  // Stars on G stay fixed for the whole invocation.
  std::vector<StarSigma> split(inst_.num_tests());
  for (int t : tests) split[t] = StarAndSigma(inst_, t, g);

  BackboneRecord record;
  record.budget = budget;
  record.objects = g;
  record.pairs = pairs;

  std::vector<BackboneStep> steps;
  std::vector<PendingSubtree> pending;
  SubsetMask u = g;

  auto take = [&](std::size_t pos) {
    const int t = tests[pos];
    tests.erase(tests.begin() + static_cast<std::ptrdiff_t>(pos));
    BackboneStep step{t, split[t].star_outcome, {}};
    for (const auto& cell : OutcomePartition(inst_, t, u)) {
      if (cell.outcome == step.star_outcome) continue;
      DFEP_CHECK(2 * CountPairs(inst_, cell.members) <= pairs,
                 "off-backbone child keeps more than P(G)/2 pairs");
      step.children.emplace_back(cell.outcome, pending.size());
      pending.push_back(Spawn(cell.members, tests));
    }
    u &= split[t].star;
    steps.push_back(std::move(step));
    return inst_.cost(t);
  };

  // Probability-coverage loop; eligibility shrinks with the spend.
  Cost spent = 0;
  while (true) {
    std::ptrdiff_t best = -1;
    BigInt best_gain = 0;
    Cost best_cost = 1;
    const BigInt u_weight = inst_.Weight(u);
    for (std::size_t pos = 0; pos < tests.size(); ++pos) {
      const int t = tests[pos];
      const Cost c = inst_.cost(t);
      if (c > budget - spent) continue;
      const BigInt gain = u_weight - inst_.Weight(u & split[t].star);
      if (best < 0 || gain * best_cost > best_gain * c) {
        best = static_cast<std::ptrdiff_t>(pos);
        best_gain = gain;
        best_cost = c;
      }
    }
    if (best < 0 || best_gain == 0) break;
    record.t_a.push_back(tests[best]);
    spent += take(static_cast<std::size_t>(best));
  }

  // Pair-coverage loop; eligibility is against the full budget.
  Cost spent_pairs = 0;
  while (!tests.empty()) {
    const PairCount u_pairs = CountPairs(inst_, u);
    if (u_pairs == 0) break;
    std::ptrdiff_t best = -1;
    PairCount best_gain = 0;
    Cost best_cost = 1;
    for (std::size_t pos = 0; pos < tests.size(); ++pos) {
      const int t = tests[pos];
      const Cost c = inst_.cost(t);
      if (c > budget) continue;
      const PairCount gain = u_pairs - CountPairs(inst_, u & split[t].star);
      if (best < 0 || gain * best_cost > best_gain * c) {
        best = static_cast<std::ptrdiff_t>(pos);
        best_gain = gain;
        best_cost = c;
      }
    }
    if (best < 0 || best_gain == 0) break;
    record.t_b.push_back(tests[best]);
    spent_pairs += take(static_cast<std::size_t>(best));
    if (spent_pairs > budget) break;
  }

  DFEP_CHECK(!steps.empty(), "Unsplittable: empty backbone");
  const PairCount residual_pairs = CountPairs(inst_, u);
  DFEP_CHECK(residual_pairs < pairs, "residual call does not lose any pair");
  record.covered = pairs - residual_pairs;

  std::optional<std::size_t> residual;
  if (!u.empty()) {
    residual = pending.size();
    pending.push_back(Spawn(u, tests));
  }

  Subtree out;
  out.backbones.push_back(std::move(record));
  std::vector<NodeId> ids;
  ids.reserve(steps.size());
  for (const auto& step : steps) ids.push_back(out.tree.AddTest(step.test));
  out.tree.set_root(ids.front());

  std::vector<NodeId> grafted(pending.size());
  for (std::size_t i = 0; i < pending.size(); ++i) {
    Subtree child = Resolve(pending[i]);
    grafted[i] = out.tree.Graft(child.tree);
    const int offset = static_cast<int>(out.backbones.size());
    for (auto& b : child.backbones) {
      b.invocation += offset;
      out.backbones.push_back(std::move(b));
    }
  }
  for (std::size_t k = 0; k < steps.size(); ++k) {
    for (const auto& [outcome, index] : steps[k].children) {
      out.tree.AddChild(ids[k], outcome, grafted[index]);
    }
    if (k + 1 < steps.size()) {
      out.tree.AddChild(ids[k], steps[k].star_outcome, ids[k + 1]);
    } else if (residual) {
      out.tree.AddChild(ids[k], steps[k].star_outcome, grafted[*residual]);
    }
  }
  return out;
}

}  // namespace

BuildResult Build(const Instance& inst, const BuildOptions& options) {
  DecTreeBuilder builder(inst, options.threads);
  Subtree top = builder.Run(inst.all(), inst.AllTests());
  BuildResult result;
  result.tree = std::move(top.tree);
  result.backbones = std::move(top.backbones);
  return result;
}

TestSequence BackboneSequence(const BuildResult& result, int invocation) {
  if (invocation < 0 ||
      invocation >= static_cast<int>(result.backbones.size())) {
    throw Error(ErrorCode::kInvalidInput,
                "no invocation " + std::to_string(invocation));
  }
  const auto& record = result.backbones[invocation];
  return TestSequence(record.Sequence(), record.objects);
}

double Rho() { return 3.0 / std::log2(9.0 / 8.0); }

double WorstCostBound(PairCount pairs) {
  return pairs <= 1 ? 1.0 : 1.0 + Rho() * std::log2(static_cast<double>(pairs));
}

bool WithinWorstCostBound(Cost built, Cost opt, PairCount pairs) {
  if (built <= opt) return true;
  if (opt <= 0 || pairs <= 1) return false;
  const auto a = static_cast<unsigned>(built - opt);
  const auto b = static_cast<unsigned>(opt);
  const BigInt lhs = boost::multiprecision::pow(BigInt(9), a);
  const BigInt rhs = boost::multiprecision::pow(BigInt(8), a) *
                     boost::multiprecision::pow(BigInt(pairs), 3 * b);
  return lhs <= rhs;
}

}  // namespace dfep
