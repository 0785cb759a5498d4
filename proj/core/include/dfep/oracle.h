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

// Exact reference solvers for desk-scale instances. Exponential by design;
// every entry point refuses inputs beyond OracleLimits with
// Error(kInstanceTooLarge) instead of truncating.

#ifndef DFEP_ORACLE_H_
#define DFEP_ORACLE_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "dfep/decision_tree.h"
#include "dfep/instance.h"
#include "dfep/rational.h"
#include "dfep/submodular.h"

namespace dfep {

struct OracleLimits {
  int max_objects = 12;  // tree oracles: memo over object subsets
  int max_tests = 15;    // sequence / subset oracles: 2^|T| states
};

struct OracleResult {
  // Integer-valued for OPT_W and totcost*; exact rational otherwise.
  Rational value;
  std::optional<DecisionTree> tree;  // OptExpected / OptWorst
  std::vector<int> sequence;         // sequence oracles, budgeted optimum
  std::uint64_t explored = 0;        // DP states visited
};

// Minimum expected testing cost over decision trees for the objects in
// `objects`, with their probabilities as given (not renormalized).
OracleResult OptExpected(const Instance& inst, const SubsetMask& objects,
                         const OracleLimits& limits = {});
OracleResult OptExpected(const Instance& inst, const OracleLimits& limits = {});

OracleResult OptWorst(const Instance& inst, const SubsetMask& objects,
                      const OracleLimits& limits = {});
OracleResult OptWorst(const Instance& inst, const OracleLimits& limits = {});

// Cheapest test set covering every pair of S (stars on S). The witness is
// listed in increasing test id; any order has the same total cost.
OracleResult TotCostStar(const Instance& inst, const OracleLimits& limits = {});

// Minimum separation cost over pair-covering test sequences. Zero with an
// empty witness when P(S) = 0.
OracleResult SepCostStar(const Instance& inst, const OracleLimits& limits = {});

// max f(R) subject to sum_{t in R} c(t) <= budget, over f.tests().
OracleResult BudgetedSubmodularOpt(const SubmodularObjective& f, Cost budget,
                                   const OracleLimits& limits = {});

}  // namespace dfep

#endif  // DFEP_ORACLE_H_
