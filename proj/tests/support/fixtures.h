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

#ifndef DFEP_TESTS_SUPPORT_FIXTURES_H_
#define DFEP_TESTS_SUPPORT_FIXTURES_H_

#include <string>
#include <vector>

#include "dfep/decision_tree.h"
#include "dfep/instance.h"

namespace dfep::testing {

std::string DataPath(const std::string& name);

// Five objects: {0,1} class 0, {2} class 1, {3,4} class 2, probabilities
// 1/10 1/10 1/10 3/10 2/5. Test costs 2, 1, 3; test 1 isolates object 2,
// test 2 isolates object 3, test 0 isolates object 4.
Instance FiveObjects();

// The chain t1 -> t2 -> t0 on FiveObjects.
DecisionTree FiveObjectsChain();

// Builds a RawInstance from a compact description and validates it.
Instance MakeInstance(const std::vector<int>& classes,
                      const std::vector<std::string>& probs,
                      const std::vector<Cost>& costs,
                      const std::vector<std::vector<int>>& outcomes);

}  // namespace dfep::testing

#endif  // DFEP_TESTS_SUPPORT_FIXTURES_H_
