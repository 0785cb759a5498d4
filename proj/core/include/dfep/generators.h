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

// Instance families. All generators are pure functions of their arguments;
// the random ones draw from std::mt19937_64 (whose output sequence is fixed
// by the standard) through local bounded-integer code, so files are
// byte-stable across platforms.

#ifndef DFEP_GENERATORS_H_
#define DFEP_GENERATORS_H_

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "dfep/costs.h"
#include "dfep/decision_tree.h"
#include "dfep/instance.h"
#include "dfep/rational.h"

namespace dfep {

// Portable draws on top of mt19937_64.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t Next() { return engine_(); }
  // Uniform in [lo, hi], by rejection sampling.
  std::int64_t Uniform(std::int64_t lo, std::int64_t hi);
  bool Coin() { return (Next() >> 63) != 0; }

  template <typename T>
  void Shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      const auto j = static_cast<std::size_t>(
          Uniform(0, static_cast<std::int64_t>(i) - 1));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

enum class ProbShape {
  kUniform,  // 1/n each
  kDyadic,   // random positive multiples of 2^-k
  kSparse,   // dyadic on a random nonempty subset, zero elsewhere
};

std::optional<ProbShape> ParseProbShape(std::string_view name);
std::string_view ProbShapeName(ProbShape shape);

struct RandomParams {
  std::uint64_t seed = 1;
  int num_objects = 6;
  int num_classes = 3;
  int num_tests = 6;
  int num_outcomes = 2;
  Cost max_cost = 4;
  ProbShape prob_shape = ProbShape::kDyadic;
  // Outcome matrices drawn before giving up with kSeparabilityUnreachable.
  int max_attempts = 1000;
};

// Classes are assigned so that every class is used; the outcome matrix is
// redrawn until all cross-class pairs are separable.
Instance GenRandom(const RandomParams& params);

// Identification instance on n objects: object i has its own class and
// probability 2^-(i+1), except the last, which repeats 2^-(n-1). One unit
// cost binary test per nonconstant bitstring b over the objects (object s
// answers bit s of b); test id b - 1. Refuses n > max_n with
// kInstanceTooLarge.
Instance GenIdentificationDichotomy(int n, int max_n = 10);

// Set cover over the universe {0..universe-1}.
struct SetCoverInstance {
  int universe = 0;
  std::vector<std::vector<int>> sets;

  bool Feasible() const;
};

// {"universe": n, "sets": [[indices]...]}, zero-based indices.
SetCoverInstance ParseSetCoverJson(std::string_view text);
std::string SetCoverToJson(const SetCoverInstance& sc);

// Minimum number of sets covering the universe, with the lexicographically
// first witness among those of that size. Throws kInfeasibleCover.
std::vector<int> MinimumSetCover(const SetCoverInstance& sc);

// Random family whose union is the universe; every set is nonempty.
SetCoverInstance RandomSetCover(std::uint64_t seed, int universe, int num_sets);

// DFEP instance built from a set cover. Objects 0..n-1 are the universe
// (class 0); objects n..n+b-2 are o_1..o_{b-1} with o_i in class i. Test j
// answers 0 on sets[j] and 1 elsewhere, including on every o_i. The last
// test answers 0 on the universe and i-1 on o_i, so it cannot tell o_1 from
// the universe. All costs are 1; p(o_1) = 1 - (n+b-2)·eta, others eta.
//
// o_1 is in class 1, not the universe's class, so its leaf path has to
// separate it from every universe element; that path is the extracted cover.
struct ReductionInstance {
  Instance instance;
  SetCoverInstance cover;
  int b = 2;
  Rational eta;
  int tilde_test = 0;  // id of the last test
  int o1 = 0;          // object id of o_1
};

// 1/(2(n+b-2)+2), a round value strictly below the 1/(2(n+b-2)) bound.
Rational DefaultEta(int universe, int b);

// Requires b >= 2, 0 < eta < 1/(2(n+b-2)) (kInvalidInput) and a feasible
// family (kInfeasibleCover).
ReductionInstance GenSetCoverReduction(const SetCoverInstance& sc, int b,
                                       std::optional<Rational> eta = {});

// Chain tree: the sets of `cover` in order along o_1's path, each sending
// its members to a class-0 leaf, then the last test splitting the o_i.
DecisionTree ReductionChainTree(const ReductionInstance& red,
                                const std::vector<int>& cover);

struct ExtractedCover {
  std::vector<int> sets;  // set indices in path order
  Cost worst = 0;         // cost_W of the tree
  Rational expected;      // cost_E of the tree
};

// Set indices of the tests on o_1's root-to-leaf path. Checks the family
// covers the universe, has at most 2·cost_E and at most cost_W members;
// a failed check is an internal error.
ExtractedCover ExtractCover(const DecisionTree& tree,
                            const ReductionInstance& red);

}  // namespace dfep

#endif  // DFEP_GENERATORS_H_
