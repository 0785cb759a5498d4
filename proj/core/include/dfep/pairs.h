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

// Pair arithmetic and the per-test outcome partition.
//
// A pair of G is two objects of G from different classes. For a test t and
// object set G, the "star" cell is the outcome cell of G holding the most
// pairs, and sigma = G minus the star. Pairs inside sigma are kept by t,
// pairs with one end in sigma and one in the star are separated, and pairs
// inside the star are left uncovered.

#ifndef DFEP_PAIRS_H_
#define DFEP_PAIRS_H_

#include <cstdint>
#include <vector>

#include "dfep/instance.h"
#include "dfep/subset_mask.h"

namespace dfep {

using PairCount = std::int64_t;

// n_i(G) for every class i. Entries sum to |G|.
struct ClassCounts {
  std::vector<int> counts;

  int total() const;
};

ClassCounts CountClasses(const Instance& inst, const SubsetMask& g);

// P(G) = sum_{i<j} n_i(G) n_j(G), evaluated as (|G|^2 - sum n_i(G)^2) / 2.
PairCount CountPairs(const Instance& inst, const SubsetMask& g);

struct OutcomeCell {
  int outcome = 0;
  SubsetMask members;
};

// Nonempty cells of G under test t, ordered by outcome label.
std::vector<OutcomeCell> OutcomePartition(const Instance& inst, int t,
                                          const SubsetMask& g);

struct StarSigma {
  int star_outcome = -1;  // -1 only when G is empty
  SubsetMask star;
  SubsetMask sigma;
};

// Ties between cells with equal pair counts go to the lowest outcome label.
StarSigma StarAndSigma(const Instance& inst, int t, const SubsetMask& g);

struct PairTripartition {
  PairCount kept = 0;
  PairCount separated = 0;
  PairCount uncovered = 0;

  PairCount covered() const { return kept + separated; }
};

PairTripartition Tripartition(const Instance& inst, int t, const SubsetMask& g);

// True when t puts the objects of G into two or more nonempty cells.
bool Splits(const Instance& inst, int t, const SubsetMask& g);

}  // namespace dfep

#endif  // DFEP_PAIRS_H_
