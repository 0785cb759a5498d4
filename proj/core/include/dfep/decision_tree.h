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

#ifndef DFEP_DECISION_TREE_H_
#define DFEP_DECISION_TREE_H_

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "dfep/instance.h"
#include "dfep/pairs.h"
#include "dfep/subset_mask.h"

namespace dfep {

using NodeId = int;

struct TestNode {
  int test = 0;
  std::map<int, NodeId> children;  // outcome label -> child
};

struct LeafNode {
  int class_id = 0;
  SubsetMask objects;
};

// Arena-allocated tree. Node ids are positions in the arena; the root is
// not necessarily node 0.
class DecisionTree {
 public:
  NodeId AddLeaf(int class_id, SubsetMask objects);
  NodeId AddTest(int test);
  void AddChild(NodeId parent, int outcome, NodeId child);

  // Copies every node of `other` into this arena and returns the id that
  // other.root() received.
  NodeId Graft(const DecisionTree& other);

  void set_root(NodeId root) { root_ = root; }
  NodeId root() const { return root_; }
  int size() const { return static_cast<int>(nodes_.size()); }

  bool is_leaf(NodeId id) const {
    return std::holds_alternative<LeafNode>(nodes_[id]);
  }
  const TestNode& test_node(NodeId id) const {
    return std::get<TestNode>(nodes_[id]);
  }
  const LeafNode& leaf_node(NodeId id) const {
    return std::get<LeafNode>(nodes_[id]);
  }

  // Single leaf holding every object of a one-class set.
  static DecisionTree Leaf(int class_id, SubsetMask objects);

 private:
  std::vector<std::variant<TestNode, LeafNode>> nodes_;
  NodeId root_ = -1;
};

// Problems found by CheckTree, empty when the tree is a valid decision tree
// for the instance: every leaf nonempty and single-class with the right
// label, leaves partition S, each object routes to the leaf that lists it,
// and no test repeats on a root-to-leaf path.
std::vector<std::string> CheckTree(const DecisionTree& tree,
                                   const Instance& inst);

// Tests chosen on one DecTree invocation: t_A from the probability-driven
// loop, t_B from the pair-driven loop.
struct BackboneRecord {
  int invocation = 0;
  Cost budget = 0;
  std::vector<int> t_a;
  std::vector<int> t_b;
  SubsetMask objects;        // the invocation's object set
  PairCount pairs = 0;       // P(objects)
  PairCount covered = 0;     // pairs covered by t_A followed by t_B

  // t_I = t_A then t_B.
  std::vector<int> Sequence() const;
};

}  // namespace dfep

#endif  // DFEP_DECISION_TREE_H_
