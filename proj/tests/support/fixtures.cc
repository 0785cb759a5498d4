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

#include "fixtures.h"

#include <stdexcept>

#include "dfep/instance_io.h"

namespace dfep::testing {

std::string DataPath(const std::string& name) {
  return std::string(DFEP_TEST_DATA_DIR) + "/" + name;
}

Instance FiveObjects() { return LoadInstance(DataPath("five_objects.json")); }

DecisionTree FiveObjectsChain() {
  const Instance inst = FiveObjects();
  auto leaf = [&](DecisionTree& tree, std::vector<int> ids) {
    return tree.AddLeaf(inst.class_of(ids.front()),
                        SubsetMask::FromIndices(inst.num_objects(), ids));
  };
  DecisionTree tree;
  const NodeId a = tree.AddTest(1);
  const NodeId b = tree.AddTest(2);
  const NodeId c = tree.AddTest(0);
  tree.AddChild(a, 1, leaf(tree, {2}));
  tree.AddChild(a, 0, b);
  tree.AddChild(b, 1, leaf(tree, {3}));
  tree.AddChild(b, 0, c);
  tree.AddChild(c, 1, leaf(tree, {4}));
  tree.AddChild(c, 0, leaf(tree, {0, 1}));
  tree.set_root(a);
  return tree;
}

Instance MakeInstance(const std::vector<int>& classes,
                      const std::vector<std::string>& probs,
                      const std::vector<Cost>& costs,
                      const std::vector<std::vector<int>>& outcomes) {
  RawInstance raw;
  int m = 0;
  for (int c : classes) m = std::max(m, c + 1);
  raw.num_classes = m;
  for (std::size_t s = 0; s < classes.size(); ++s) {
    const auto p = ParseRational(probs[s]);
    if (!p) throw std::invalid_argument("bad probability " + probs[s]);
    raw.objects.push_back({static_cast<int>(s), classes[s], *p});
  }
  for (std::size_t t = 0; t < costs.size(); ++t) {
    raw.tests.push_back({static_cast<int>(t), costs[t], outcomes[t]});
  }
  return ValidateOrThrow(std::move(raw));
}

}  // namespace dfep::testing
