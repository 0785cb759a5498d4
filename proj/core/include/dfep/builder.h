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

// DecTree: a decision tree whose expected and worst testing costs are both
// within O(log n) of optimal.
//
// One invocation on object set G with tests T:
//   1. P(G) = 0: a leaf. P(G) = 1: the cheapest test separating the two
//      objects, with one leaf per side.
//   2. B = FindBudget(G, T).
//   3. Probability loop: while some test costs <= B - spent, take the test
//      maximizing p(U ∩ sigma(t)) / c(t); recurse on every non-star cell of
//      U; shrink U to its star cell.
//   4. Pair loop: repeat taking the test with c(t) <= B maximizing
//      (P(U) - P(U ∩ star(t))) / c(t), recursing the same way, until the
//      loop's own spend exceeds B or T runs out.
//   5. Recurse on the residual U below the last backbone test.
// Stars are computed once per invocation on G. Both loops stop early once
// no eligible test has positive gain; such picks would leave U unchanged.

#ifndef DFEP_BUILDER_H_
#define DFEP_BUILDER_H_

#include <vector>

#include "dfep/costs.h"
#include "dfep/decision_tree.h"
#include "dfep/instance.h"

namespace dfep {

struct BuildOptions {
  // Worker threads for independent recursive calls. The output does not
  // depend on this value.
  int threads = 1;
};

struct BuildResult {
  DecisionTree tree;
  // One record per invocation with P(G) >= 1, in preorder. Invocation 0 is
  // the top-level call.
  std::vector<BackboneRecord> backbones;
};

// Throws Error(kInternal) if an invocation cannot make progress, which a
// validated instance rules out.
BuildResult Build(const Instance& inst, const BuildOptions& options = {});

// t_I = t_A followed by t_B of the given invocation, over its object set.
TestSequence BackboneSequence(const BuildResult& result, int invocation);

// rho = 3 / log2(9/8), the worst-cost ratio constant.
double Rho();

// 1 + rho * log2(pairs), for display.
double WorstCostBound(PairCount pairs);

// built <= (1 + rho * log2(pairs)) * opt, decided exactly: with
// built - opt = a and opt = b the test is 9^a <= 8^a * pairs^(3b).
bool WithinWorstCostBound(Cost built, Cost opt, PairCount pairs);

}  // namespace dfep

#endif  // DFEP_BUILDER_H_
