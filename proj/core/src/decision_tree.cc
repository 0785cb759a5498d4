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

#include "dfep/decision_tree.h"

#include <set>

#include "dfep/error.h"

namespace dfep {

NodeId DecisionTree::AddLeaf(int class_id, SubsetMask objects) {
  nodes_.emplace_back(LeafNode{class_id, std::move(objects)});
  return size() - 1;
}

NodeId DecisionTree::AddTest(int test) {
  nodes_.emplace_back(TestNode{test, {}});
  return size() - 1;
}

void DecisionTree::AddChild(NodeId parent, int outcome, NodeId child) {
  auto& node = std::get<TestNode>(nodes_[parent]);
  const bool inserted = node.children.emplace(outcome, child).second;
  DFEP_CHECK(inserted, "outcome already has a child");
}

NodeId DecisionTree::Graft(const DecisionTree& other) {
  const NodeId offset = size();
  for (const auto& node : other.nodes_) {
    if (const auto* test = std::get_if<TestNode>(&node)) {
      TestNode copy{test->test, {}};
      for (const auto& [o, child] : test->children) copy.children[o] = child + offset;
      nodes_.emplace_back(std::move(copy));
    } else {
      nodes_.push_back(node);
    }
  }
  return other.root_ + offset;
}

DecisionTree DecisionTree::Leaf(int class_id, SubsetMask objects) {
  DecisionTree tree;
  tree.set_root(tree.AddLeaf(class_id, std::move(objects)));
  return tree;
}

std::vector<std::string> CheckTree(const DecisionTree& tree,
                                   const Instance& inst) {
  std::vector<std::string> problems;
  const int n = inst.num_objects();
  if (tree.root() < 0 || tree.root() >= tree.size()) {
    problems.push_back("tree has no valid root");
    return problems;
  }

  SubsetMask covered = inst.Empty();
  std::vector<int> visits(tree.size(), 0);
  // Depth-first walk carrying the tests on the current path.
  struct Frame {
    NodeId id;
    std::set<int> path_tests;
  };
  std::vector<Frame> stack{{tree.root(), {}}};
  while (!stack.empty()) {
    Frame frame = std::move(stack.back());
    stack.pop_back();
    if (frame.id < 0 || frame.id >= tree.size()) {
      problems.push_back("dangling child id " + std::to_string(frame.id));
      continue;
    }
    if (++visits[frame.id] > 1) {
      problems.push_back("node " + std::to_string(frame.id) + " reachable twice");
      continue;
    }
    if (tree.is_leaf(frame.id)) {
      const auto& leaf = tree.leaf_node(frame.id);
      if (leaf.objects.universe() != static_cast<std::size_t>(n)) {
        problems.push_back("leaf " + std::to_string(frame.id) +
                           " object set has wrong universe");
        continue;
      }
      if (leaf.objects.empty()) {
        problems.push_back("leaf " + std::to_string(frame.id) + " is empty");
      }
      if (leaf.objects.Intersects(covered)) {
        problems.push_back("leaf " + std::to_string(frame.id) +
                           " overlaps another leaf");
      }
      covered |= leaf.objects;
      leaf.objects.ForEach([&](int s) {
        if (inst.class_of(s) != leaf.class_id) {
          problems.push_back("object " + std::to_string(s) + " of class " +
                             std::to_string(inst.class_of(s)) +
                             " in leaf labelled " +
                             std::to_string(leaf.class_id));
        }
      });
      continue;
    }
    const auto& node = tree.test_node(frame.id);
    if (node.test < 0 || node.test >= inst.num_tests()) {
      problems.push_back("node " + std::to_string(frame.id) +
                         " uses unknown test " + std::to_string(node.test));
      continue;
    }
    if (!frame.path_tests.insert(node.test).second) {
      problems.push_back("test " + std::to_string(node.test) +
                         " repeats on a root-to-leaf path");
    }
    if (node.children.empty()) {
      problems.push_back("test node " + std::to_string(frame.id) +
                         " has no children");
    }
    for (auto it = node.children.rbegin(); it != node.children.rend(); ++it) {
      stack.push_back({it->second, frame.path_tests});
    }
  }
  if (!problems.empty()) return problems;
  if (covered != inst.all()) {
    problems.push_back("leaves do not cover objects " +
                       (inst.all() - covered).ToString());
  }

  // Route every object and confirm it lands in the leaf that lists it.
  for (int s = 0; s < n; ++s) {
    NodeId id = tree.root();
    while (!tree.is_leaf(id)) {
      const auto& node = tree.test_node(id);
      auto it = node.children.find(inst.outcome(node.test, s));
      if (it == node.children.end()) {
        problems.push_back("object " + std::to_string(s) +
                           " has no branch at node " + std::to_string(id));
        id = -1;
        break;
      }
      id = it->second;
    }
    if (id >= 0 && !tree.leaf_node(id).objects.contains(s)) {
      problems.push_back("object " + std::to_string(s) +
                         " routes to leaf " + std::to_string(id) +
                         " which does not list it");
    }
  }
  return problems;
}

std::vector<int> BackboneRecord::Sequence() const {
  std::vector<int> seq = t_a;
  seq.insert(seq.end(), t_b.begin(), t_b.end());
  return seq;
}

}  // namespace dfep
