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

// Pair Separation Problem: tests are replaced by a family of object subsets
// with rational costs. A subset covers its members; a pair is covered when
// either end is.

#ifndef DFEP_PSP_H_
#define DFEP_PSP_H_

#include <vector>

#include "dfep/instance.h"
#include "dfep/rational.h"
#include "dfep/subset_mask.h"

namespace dfep {

struct PspInstance {
  std::vector<int> classes;     // per object
  std::vector<Rational> probs;  // per object
  std::vector<SubsetMask> subsets;
  std::vector<Rational> costs;  // per subset, > 0
  // Test each subset was induced from, or -1 for hand-built families.
  std::vector<int> source_test;

  int num_objects() const { return static_cast<int>(classes.size()); }
  int num_subsets() const { return static_cast<int>(subsets.size()); }
  Rational Probability(const SubsetMask& set) const;
};

// X(t) = sigma_S(t) with cost c(t), for every test t.
PspInstance PspFromDfep(const Instance& inst);

// While some remaining subset costs <= budget: take the one maximizing
// p(U ∩ X) / c(X) (ties to the lowest index), remove its members from U and
// deduct its cost from the budget. Returns subset indices in order.
std::vector<int> GreedyPsp(const PspInstance& psp, const Rational& budget);

// Set-based separation cost: objects first covered by X_i pay the prefix
// cost through X_i, uncovered objects pay the whole sequence.
Rational PspSepCost(const PspInstance& psp, const std::vector<int>& sequence);

}  // namespace dfep

#endif  // DFEP_PSP_H_
