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

// Tree JSON:
//
//   {
//     "root": 0,
//     "nodes": [
//       {"kind": "test", "test": 1, "children": {"0": 1, "1": 2}},
//       {"kind": "leaf", "class": 0, "objects": [0, 1]}, ...
//     ],
//     "backbones": [{"invocation": 0, "B": 3, "t_A": [1], "t_B": [2],
//                    "objects": [...], "pairs": 8, "covered": 5}, ...]
//   }
//
// Nodes are renumbered in preorder from the root (children by increasing
// outcome), so equal trees always serialize to equal bytes.

#ifndef DFEP_TREE_IO_H_
#define DFEP_TREE_IO_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dfep/costs.h"
#include "dfep/decision_tree.h"
#include "dfep/instance.h"
#include "dfep/oracle.h"
#include "dfep/submodular.h"

namespace dfep {

std::string TreeToJson(const DecisionTree& tree,
                       std::span<const BackboneRecord> backbones = {});

struct ParsedTree {
  DecisionTree tree;
  std::vector<BackboneRecord> backbones;
};

// `num_objects` sizes the leaf object sets. Throws Error(kInvalidInput) on
// schema violations or out-of-range object ids; structural validity against
// an instance is left to CheckTree.
ParsedTree ParseTreeJson(std::string_view text, int num_objects);

// Graphviz rendering: test nodes "t<id> (c=<cost>)", edges labelled by
// outcome, leaves by class.
std::string TreeToDot(const DecisionTree& tree, const Instance& inst);

// Rationals appear as "a/b" strings; `*_decimal` fields carry a rounded
// copy for display.
std::string GreedyTraceToJson(const GreedyTrace& trace);
std::string CostReportToJson(const CostReport& report);
std::string OracleResultToJson(const OracleResult& result);

}  // namespace dfep

#endif  // DFEP_TREE_IO_H_
