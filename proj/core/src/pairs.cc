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

#include "dfep/pairs.h"

#include <numeric>

namespace dfep {

int ClassCounts::total() const {
  return std::accumulate(counts.begin(), counts.end(), 0);
}

ClassCounts CountClasses(const Instance& inst, const SubsetMask& g) {
  ClassCounts out;
  out.counts.resize(inst.num_classes());
  for (int c = 0; c < inst.num_classes(); ++c) {
    out.counts[c] = (g & inst.class_mask(c)).count();
  }
  return out;
}

PairCount CountPairs(const Instance& inst, const SubsetMask& g) {
  PairCount size = 0;
  PairCount squares = 0;
  for (int c = 0; c < inst.num_classes(); ++c) {
    const PairCount k = (g & inst.class_mask(c)).count();
    size += k;
    squares += k * k;
  }
  return (size * size - squares) / 2;
}

std::vector<OutcomeCell> OutcomePartition(const Instance& inst, int t,
                                          const SubsetMask& g) {
  std::vector<OutcomeCell> cells;
  for (int o = 0; o < inst.num_outcomes(); ++o) {
    SubsetMask cell = g & inst.outcome_mask(t, o);
    if (!cell.empty()) cells.push_back({o, std::move(cell)});
  }
  return cells;
}

StarSigma StarAndSigma(const Instance& inst, int t, const SubsetMask& g) {
  StarSigma out{-1, inst.Empty(), g};
  PairCount best = -1;
  for (int o = 0; o < inst.num_outcomes(); ++o) {
    SubsetMask cell = g & inst.outcome_mask(t, o);
    if (cell.empty()) continue;
    const PairCount pairs = CountPairs(inst, cell);
    if (pairs > best) {
      best = pairs;
      out.star_outcome = o;
      out.star = std::move(cell);
    }
  }
  out.sigma = g - out.star;
  return out;
}

PairTripartition Tripartition(const Instance& inst, int t, const SubsetMask& g) {
  const StarSigma ss = StarAndSigma(inst, t, g);
  PairTripartition out;
  out.kept = CountPairs(inst, ss.sigma);
  out.uncovered = CountPairs(inst, ss.star);
  out.separated = CountPairs(inst, g) - out.kept - out.uncovered;
  return out;
}

bool Splits(const Instance& inst, int t, const SubsetMask& g) {
  int nonempty = 0;
  for (int o = 0; o < inst.num_outcomes(); ++o) {
    if (g.Intersects(inst.outcome_mask(t, o)) && ++nonempty >= 2) return true;
  }
  return false;
}

}  // namespace dfep
