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

#include <benchmark/benchmark.h>

#include <algorithm>
#include <string>

#include "dfep/generators.h"
#include "dfep/submodular.h"

namespace dfep {
namespace {

Instance BudgetInstance(int n) {
  RandomParams p;
  p.seed = 3;
  p.num_objects = n;
  p.num_classes = std::max(2, n / 3);
  p.num_tests = std::max(8, n / 4);
  p.num_outcomes = 3;
  p.max_cost = 50;
  return GenRandom(p);
}

void BM_FindBudget(benchmark::State& state) {
  const Instance inst = BudgetInstance(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(FindBudget(inst));
}
BENCHMARK(BM_FindBudget)->RangeMultiplier(4)->Range(16, 256)->Unit(benchmark::kMicrosecond);

void BM_FindBudgetLinear(benchmark::State& state) {
  const Instance inst = BudgetInstance(static_cast<int>(state.range(0)));
  const auto tests = inst.AllTests();
  for (auto _ : state) benchmark::DoNotOptimize(FindBudgetLinear(inst, inst.all(), tests));
}
BENCHMARK(BM_FindBudgetLinear)->RangeMultiplier(4)->Range(16, 256)->Unit(benchmark::kMicrosecond);

void BM_AdaptedGreedy(benchmark::State& state) {
  const Instance inst = BudgetInstance(static_cast<int>(state.range(0)));
  const auto f = SubmodularObjective::PairCoverage(inst);
  const Cost budget = inst.TotalCost() / 3;
  for (auto _ : state) benchmark::DoNotOptimize(AdaptedGreedy(f, budget));
}
BENCHMARK(BM_AdaptedGreedy)->RangeMultiplier(4)->Range(16, 256)->Unit(benchmark::kMicrosecond);

}  // namespace
}  // namespace dfep
