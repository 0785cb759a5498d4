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

#include "dfep/builder.h"
#include "dfep/generators.h"

namespace dfep {
namespace {

Instance BenchInstance(int n, int tests) {
  RandomParams p;
  p.seed = 11;
  p.num_objects = n;
  p.num_classes = std::max(2, n / 4);
  p.num_tests = tests;
  p.num_outcomes = 3;
  p.max_cost = 9;
  return GenRandom(p);
}

void BM_Build(benchmark::State& state) {
  const Instance inst = BenchInstance(static_cast<int>(state.range(0)),
                                      static_cast<int>(state.range(1)));
  const BuildOptions options{static_cast<int>(state.range(2))};
  for (auto _ : state) benchmark::DoNotOptimize(Build(inst, options));
  state.SetLabel("n=" + std::to_string(inst.num_objects()));
}
BENCHMARK(BM_Build)
    ->Args({16, 12, 1})
    ->Args({64, 24, 1})
    ->Args({256, 40, 1})
    ->Args({256, 40, 4})
    ->Unit(benchmark::kMillisecond);

void BM_BuildIdentification(benchmark::State& state) {
  const Instance inst = GenIdentificationDichotomy(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Build(inst));
}
BENCHMARK(BM_BuildIdentification)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace dfep
