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

// Penn-Treebank-style constituency trees.
//
// Trees are built as plain recursive Node values and then frozen into an
// immutable ParseTree, which stores the nodes in preorder. The preorder index
// of a node is its NodeId, so ids are stable for the lifetime of the tree and
// a subtree always occupies the contiguous id range [id, end(id)).

#ifndef DISSIM_TREE_H_
#define DISSIM_TREE_H_

#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace dissim {

using NodeId = int;
inline constexpr NodeId kNoNode = -1;

// Mutable construction form of a tree node. A node is a leaf iff it has no
// children; leaves carry the surface token.
struct Node {
  std::string label;
  std::string token;
  std::vector<Node> children;

  bool is_leaf() const { return children.empty(); }
  bool operator==(const Node &other) const = default;

  static Node Leaf(std::string label, std::string token) {
    return Node{std::move(label), std::move(token), {}};
  }
  static Node Phrase(std::string label, std::vector<Node> children) {
    return Node{std::move(label), {}, std::move(children)};
  }
};

// Ordered word list with the ids of the leaves it came from (kNoNode for
// tokens that were synthesized).
struct TokenSpan {
  std::vector<std::string> tokens;
  std::vector<NodeId> source_ids;
};

class ParseTree {
 public:
  ParseTree() = default;
  explicit ParseTree(const Node &root);

  bool empty() const { return labels_.empty(); }
  int size() const { return static_cast<int>(labels_.size()); }
  NodeId root() const { return 0; }

  bool valid(NodeId id) const { return id >= 0 && id < size(); }
  const std::string &label(NodeId id) const { return labels_[id]; }
  const std::string &token(NodeId id) const { return tokens_[id]; }
  bool is_leaf(NodeId id) const { return child_count(id) == 0; }
  NodeId parent(NodeId id) const { return parents_[id]; }
  int child_count(NodeId id) const {
    return child_begin_[id + 1] - child_begin_[id];
  }
  std::span<const NodeId> children(NodeId id) const {
    return {child_ids_.data() + child_begin_[id],
            static_cast<size_t>(child_count(id))};
  }
  // One past the last preorder id of the subtree rooted at id.
  NodeId subtree_end(NodeId id) const { return ends_[id]; }
  bool dominates(NodeId ancestor, NodeId descendant) const {
    return descendant > ancestor && descendant < ends_[ancestor];
  }
  // Position of id among its parent's children, 0 for the root.
  int child_index(NodeId id) const { return sibling_index_[id]; }

  std::vector<NodeId> leaves(NodeId id) const;
  std::vector<NodeId> leaves() const { return leaves(root()); }
  std::vector<std::string> tokens(NodeId id) const;
  std::vector<std::string> tokens() const { return tokens(root()); }
  TokenSpan span(NodeId id) const;
  int leaf_count() const;

  // Copies the subtree at id back into construction form; nodes in excluded
  // (other than id itself) are dropped along with their subtrees.
  Node to_node(NodeId id) const;
  Node to_node(NodeId id, const std::unordered_set<NodeId> &excluded) const;
  Node to_node() const { return to_node(root()); }

  bool operator==(const ParseTree &other) const;

 private:
  void Flatten(const Node &node, NodeId parent, int index);

  std::vector<std::string> labels_;
  std::vector<std::string> tokens_;
  std::vector<NodeId> parents_;
  std::vector<NodeId> ends_;
  std::vector<int> sibling_index_;
  std::vector<int> child_begin_;  // size() + 1 offsets into child_ids_
  std::vector<NodeId> child_ids_;
};

// Parses one bracketed tree such as "(ROOT (S (NP (NN it)) (VP (VBZ works))))".
// Throws EmptyInputError for blank text and MalformedInputError otherwise.
ParseTree parse_ptb(std::string_view text);

// Single-line bracketing; tokens that would break the bracketing are escaped
// with the PTB bracket codes.
std::string serialize_ptb(const ParseTree &tree);
std::string serialize_ptb(const Node &node);

// Maps PTB escapes back to surface characters ("-LRB-" -> "(", "``" -> "\"").
std::string unescape_token(std::string_view token);

// Detokenizes into a sentence. Sentence-final punctuation already present in
// the span is replaced by terminator; leading and trailing commas are dropped.
// Throws EmptySpanError when tokens is empty.
std::string realize(std::span<const std::string> tokens, bool capitalize,
                    std::string_view terminator);
std::string realize(const TokenSpan &span, bool capitalize,
                    std::string_view terminator);

bool is_terminal_punctuation(std::string_view token);

}  // namespace dissim

#endif  // DISSIM_TREE_H_
