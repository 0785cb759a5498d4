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

#include "dfep/psp.h"

#include "dfep/error.h"
#include "dfep/pairs.h"

namespace dfep {

Rational PspInstance::Probability(const SubsetMask& set) const {
  Rational total = 0;
  set.ForEach([&](int s) { total += probs[s]; });
  return total;
}

PspInstance PspFromDfep(const Instance& inst) {
  PspInstance psp;
  for (const auto& obj : inst.objects()) {
    psp.classes.push_back(obj.class_id);
    psp.probs.push_back(obj.prob);
  }
  for (const auto& test : inst.tests()) {
    psp.subsets.push_back(StarAndSigma(inst, test.id, inst.all()).sigma);
    psp.costs.push_back(Rational(test.cost));
    psp.source_test.push_back(test.id);
  }
  return psp;
}

std::vector<int> GreedyPsp(const PspInstance& psp, const Rational& budget) {
  DFEP_CHECK(budget > 0, "GreedyPsp needs a positive budget");
  std::vector<int> seq;
  std::vector<bool> used(psp.subsets.size(), false);
  SubsetMask u = SubsetMask::Full(psp.classes.size());
  Rational left = budget;
  while (true) {
    int best = -1;
    Rational best_gain = 0;
    for (int x = 0; x < psp.num_subsets(); ++x) {
      if (used[x] || psp.costs[x] > left) continue;
      const Rational gain = psp.Probability(u & psp.subsets[x]);
      if (best < 0 || gain * psp.costs[best] > best_gain * psp.costs[x]) {
        best = x;
        best_gain = gain;
      }
    }
    if (best < 0) break;
    seq.push_back(best);
    used[best] = true;
    u -= psp.subsets[best];
    left -= psp.costs[best];
  }
  return seq;
}

Rational PspSepCost(const PspInstance& psp, const std::vector<int>& sequence) {
  SubsetMask covered(psp.classes.size());
  Rational prefix = 0;
  Rational total = 0;
  for (int x : sequence) {
    prefix += psp.costs[x];
    total += psp.Probability(psp.subsets[x] - covered) * prefix;
    covered |= psp.subsets[x];
  }
  total += psp.Probability(SubsetMask::Full(psp.classes.size()) - covered) * prefix;
  return total;
}

}  // namespace dfep
