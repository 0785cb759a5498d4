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

#include "dfep/tree_io.h"

#include <sstream>

#include "dfep/error.h"
#include "json_util.h"

namespace dfep {

namespace {

using json_util::Json;
using json_util::OrderedJson;

OrderedJson ObjectList(const SubsetMask& set) {
  OrderedJson arr = OrderedJson::array();
  set.ForEach([&](int s) { arr.push_back(s); });
  return arr;
}

// Preorder ids from the root; unreachable nodes are dropped.
std::vector<NodeId> PreorderNodes(const DecisionTree& tree) {
  std::vector<NodeId> order;
  if (tree.root() < 0) return order;
  std::vector<NodeId> stack{tree.root()};
  while (!stack.empty()) {
    const NodeId id = stack.back();
    stack.pop_back();
    order.push_back(id);
    if (tree.is_leaf(id)) continue;
    const auto& children = tree.test_node(id).children;
    for (auto it = children.rbegin(); it != children.rend(); ++it) {
      stack.push_back(it->second);
    }
  }
  return order;
}

}  // namespace

std::string TreeToJson(const DecisionTree& tree,
                       std::span<const BackboneRecord> backbones) {
  const auto order = PreorderNodes(tree);
  std::vector<int> renumber(tree.size(), -1);
  for (std::size_t i = 0; i < order.size(); ++i) {
    renumber[order[i]] = static_cast<int>(i);
  }
  std::ostringstream out;
  out << "{\n  \"root\": " << (order.empty() ? -1 : 0) << ",\n  \"nodes\": [";
  for (std::size_t i = 0; i < order.size(); ++i) {
    const NodeId id = order[i];
    OrderedJson j;
    if (tree.is_leaf(id)) {
      const auto& leaf = tree.leaf_node(id);
      j["kind"] = "leaf";
      j["class"] = leaf.class_id;
      j["objects"] = ObjectList(leaf.objects);
    } else {
      const auto& node = tree.test_node(id);
      j["kind"] = "test";
      j["test"] = node.test;
      OrderedJson children = OrderedJson::object();
      for (const auto& [outcome, child] : node.children) {
        children[std::to_string(outcome)] = renumber[child];
      }
      j["children"] = std::move(children);
    }
    out << (i ? ",\n    " : "\n    ") << j.dump();
  }
  out << (order.empty() ? "]" : "\n  ]") << ",\n  \"backbones\": [";
  for (std::size_t i = 0; i < backbones.size(); ++i) {
    const auto& b = backbones[i];
    OrderedJson j;
    j["invocation"] = b.invocation;
    j["B"] = b.budget;
    j["t_A"] = b.t_a;
    j["t_B"] = b.t_b;
    j["objects"] = ObjectList(b.objects);
    j["pairs"] = b.pairs;
    j["covered"] = b.covered;
    out << (i ? ",\n    " : "\n    ") << j.dump();
  }
  out << (backbones.empty() ? "]" : "\n  ]") << "\n}\n";
  return out.str();
}

namespace {

SubsetMask ParseObjects(const Json& j, const char* key, const std::string& where,
                        int num_objects) {
  SubsetMask set(num_objects);
  for (int s : json_util::GetIntArray(j, key, where)) {
    if (s < 0 || s >= num_objects) {
      throw Error(ErrorCode::kInvalidInput,
                  where + " lists object " + std::to_string(s) +
                      " outside 0.." + std::to_string(num_objects - 1));
    }
    set.insert(s);
  }
  return set;
}

}  // namespace

ParsedTree ParseTreeJson(std::string_view text, int num_objects) {
  const Json j = json_util::Parse(text);
  json_util::RequireKeys(j, "tree", {"root", "nodes"}, {"backbones"});
  const Json& nodes = json_util::GetArray(j, "nodes", "tree");
  const int count = static_cast<int>(nodes.size());
  ParsedTree out;

  // Create every node first so children may point forward.
  std::vector<std::vector<std::pair<int, int>>> edges(count);
  for (int i = 0; i < count; ++i) {
    const std::string where = "tree.nodes[" + std::to_string(i) + "]";
    const Json& node = nodes[i];
    if (!node.is_object() || !node.contains("kind") || !node["kind"].is_string()) {
      throw Error(ErrorCode::kInvalidInput, where + " needs a string \"kind\"");
    }
    const std::string kind = node["kind"];
    if (kind == "leaf") {
      json_util::RequireKeys(node, where, {"kind", "class", "objects"});
      out.tree.AddLeaf(json_util::GetInt(node, "class", where),
                       ParseObjects(node, "objects", where, num_objects));
    } else if (kind == "test") {
      json_util::RequireKeys(node, where, {"kind", "test", "children"});
      out.tree.AddTest(json_util::GetInt(node, "test", where));
      const Json& children = node["children"];
      if (!children.is_object()) {
        throw Error(ErrorCode::kInvalidInput, where + ".children must be an object");
      }
      for (const auto& [key, value] : children.items()) {
        int outcome = 0;
        try {
          std::size_t used = 0;
          outcome = std::stoi(key, &used);
          if (used != key.size() || std::to_string(outcome) != key) {
            throw std::invalid_argument(key);
          }
        } catch (const std::exception&) {
          throw Error(ErrorCode::kInvalidInput,
                      where + ".children key \"" + key + "\" is not an outcome");
        }
        const auto child = json_util::AsInt64(value, where + ".children." + key);
        if (child < 0 || child >= count) {
          throw Error(ErrorCode::kInvalidInput,
                      where + ".children." + key + " points outside the node list");
        }
        edges[i].emplace_back(outcome, static_cast<int>(child));
      }
    } else {
      throw Error(ErrorCode::kInvalidInput, where + " has unknown kind \"" + kind + "\"");
    }
  }
  for (int i = 0; i < count; ++i) {
    for (const auto& [outcome, child] : edges[i]) {
      out.tree.AddChild(i, outcome, child);
    }
  }
  const int root = json_util::GetInt(j, "root", "tree");
  if (root < 0 || root >= count) {
    throw Error(ErrorCode::kInvalidInput, "tree.root points outside the node list");
  }
  out.tree.set_root(root);

  if (j.contains("backbones")) {
    const Json& backbones = json_util::GetArray(j, "backbones", "tree");
    for (std::size_t i = 0; i < backbones.size(); ++i) {
      const std::string where = "tree.backbones[" + std::to_string(i) + "]";
      const Json& b = backbones[i];
      json_util::RequireKeys(b, where,
                             {"invocation", "B", "t_A", "t_B", "objects", "pairs",
                              "covered"});
      BackboneRecord record;
      record.invocation = json_util::GetInt(b, "invocation", where);
      record.budget = json_util::GetInt64(b, "B", where);
      record.t_a = json_util::GetIntArray(b, "t_A", where);
      record.t_b = json_util::GetIntArray(b, "t_B", where);
      record.objects = ParseObjects(b, "objects", where, num_objects);
      record.pairs = json_util::GetInt64(b, "pairs", where);
      record.covered = json_util::GetInt64(b, "covered", where);
      out.backbones.push_back(std::move(record));
    }
  }
  return out;
}

std::string TreeToDot(const DecisionTree& tree, const Instance& inst) {
  std::ostringstream out;
  out << "digraph dectree {\n  node [fontname=\"Helvetica\"];\n";
  for (NodeId id : PreorderNodes(tree)) {
    if (tree.is_leaf(id)) {
      const auto& leaf = tree.leaf_node(id);
      out << "  n" << id << " [shape=box, label=\"class " << leaf.class_id
          << "\\n" << leaf.objects.ToString() << "\"];\n";
      continue;
    }
    const auto& node = tree.test_node(id);
    out << "  n" << id << " [shape=ellipse, label=\"t" << node.test
        << " (c=" << inst.cost(node.test) << ")\"];\n";
    for (const auto& [outcome, child] : node.children) {
      out << "  n" << id << " -> n" << child << " [label=\"" << outcome << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string GreedyTraceToJson(const GreedyTrace& trace) {
  OrderedJson j;
  j["budget"] = trace.budget;
  j["sequence"] = trace.sequence;
  OrderedJson gains = OrderedJson::array();
  for (const auto& g : trace.gains) gains.push_back(FormatRational(g));
  j["gains"] = std::move(gains);
  j["cumulative_cost"] = trace.cumulative_cost;
  j["returned"] = trace.returned;
  j["returned_last_only"] = trace.returned_last_only;
  j["empty_eligible"] = trace.empty_eligible;
  j["returned_value"] = FormatRational(trace.returned_value);
  j["sequence_value"] = FormatRational(trace.sequence_value);
  return j.dump(2);
}

std::string CostReportToJson(const CostReport& report) {
  OrderedJson j;
  j["cost_W"] = report.worst;
  j["cost_E"] = FormatRational(report.expected);
  j["cost_E_decimal"] = FormatDecimal(report.expected);
  j["per_object"] = report.per_object;
  return j.dump(2);
}

std::string OracleResultToJson(const OracleResult& result) {
  OrderedJson j;
  j["value"] = FormatRational(result.value);
  j["value_decimal"] = FormatDecimal(result.value);
  if (result.tree) {
    j["tree"] = OrderedJson::parse(TreeToJson(*result.tree));
  } else {
    j["sequence"] = result.sequence;
  }
  j["explored"] = result.explored;
  return j.dump(2);
}

}  // namespace dfep
