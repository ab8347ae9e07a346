// Copyright 2026 The Dissim Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// A closed subset of the Tregex tree-pattern language.
//
//   pattern  := expr
//   expr     := atom (op atom)*        every op relates the first atom
//   atom     := '(' expr ')' | label ['=' name]
//   label    := NAME('|'NAME)* | '/' regex '/' | '__'
//   op       := '<' | '<<' | '<<:' | '<+(' label ')' | '>' | '$..' | '$,,'
//
// "A < B < C" means A has children B and C; "A < (B < C)" means A has child B
// which has child C. "=name" marks a named capture. Any other operator is
// rejected with UnsupportedOperatorError.

#ifndef DISSIM_PATTERN_H_
#define DISSIM_PATTERN_H_

#include <memory>
#include <optional>
#include <regex>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dissim/tree.h"

namespace dissim {

class LabelMatcher {
 public:
  enum class Kind { kExact, kRegex, kWildcard };

  LabelMatcher() : kind_(Kind::kWildcard) {}
  static LabelMatcher Exact(std::vector<std::string> alternatives);
  static LabelMatcher Regex(const std::string &source);
  static LabelMatcher Wildcard() { return LabelMatcher(); }

  Kind kind() const { return kind_; }
  bool matches(std::string_view label) const;
  std::string to_string() const;
  bool operator==(const LabelMatcher &other) const {
    return kind_ == other.kind_ && alternatives_ == other.alternatives_ &&
           source_ == other.source_;
  }

 private:
  Kind kind_;
  std::vector<std::string> alternatives_;
  std::string source_;
  std::shared_ptr<const std::regex> regex_;
};

enum class RelationKind {
  kImmediateDominance,   // <
  kDominance,            // <<
  kUnaryChainDominance,  // <<:
  kChainDominance,       // <+(L)
  kChildOf,              // >
  kSisterPrecedes,       // $..
  kSisterFollows,        // $,,
};

struct RelationOp {
  RelationKind kind = RelationKind::kImmediateDominance;
  LabelMatcher through;  // chain label, kChainDominance only

  std::string symbol() const;
  bool operator==(const RelationOp &other) const = default;
};

struct NodeSpec {
  LabelMatcher label;
  std::string capture;  // empty when not captured

  bool operator==(const NodeSpec &other) const = default;
};

// Edge of the pattern tree: nodes()[from] op nodes()[to].
struct PatternEdge {
  int from = 0;
  RelationOp op;
  int to = 0;

  bool operator==(const PatternEdge &other) const = default;
};

class TreePattern {
 public:
  const std::string &source() const { return source_; }
  // Node specs in pattern preorder; nodes()[0] is the matched root.
  const std::vector<NodeSpec> &nodes() const { return nodes_; }
  const std::vector<PatternEdge> &edges() const { return edges_; }
  // Index of the edge pointing at node (node > 0).
  int incoming_edge(int node) const { return incoming_[node]; }
  // Capture names in declaration order.
  std::vector<std::string> capture_names() const;
  bool has_capture(std::string_view name) const;

  bool operator==(const TreePattern &other) const {
    return nodes_ == other.nodes_ && edges_ == other.edges_;
  }

 private:
  friend TreePattern compile_pattern(std::string_view src);

  std::string source_;
  std::vector<NodeSpec> nodes_;
  std::vector<PatternEdge> edges_;
  std::vector<int> incoming_;
};

struct Match {
  NodeId matched_root = kNoNode;
  // Capture name -> node, in capture declaration order.
  std::vector<std::pair<std::string, NodeId>> bindings;

  std::optional<NodeId> find(std::string_view name) const;
  bool operator==(const Match &other) const = default;
  // Preorder of the root, then of the captures in declaration order.
  bool operator<(const Match &other) const;
};

TreePattern compile_pattern(std::string_view src);

std::optional<Match> find_first(const TreePattern &pattern,
                                const ParseTree &tree);
std::vector<Match> find_all(const TreePattern &pattern, const ParseTree &tree);

// Throws InvalidNodeError when a or b is not a node of tree.
bool evaluate_relation(const RelationOp &op, NodeId a, NodeId b,
                       const ParseTree &tree);

}  // namespace dissim

#endif  // DISSIM_PATTERN_H_
