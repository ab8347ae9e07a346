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

#include "dissim/pattern.h"

#include <algorithm>
#include <cctype>

#include "dissim/errors.h"

namespace dissim {

LabelMatcher LabelMatcher::Exact(std::vector<std::string> alternatives) {
  LabelMatcher m;
  m.kind_ = Kind::kExact;
  m.alternatives_ = std::move(alternatives);
  return m;
}

LabelMatcher LabelMatcher::Regex(const std::string &source) {
  LabelMatcher m;
  m.kind_ = Kind::kRegex;
  m.source_ = source;
  m.regex_ = std::make_shared<const std::regex>(source);
  return m;
}

bool LabelMatcher::matches(std::string_view label) const {
  switch (kind_) {
    case Kind::kWildcard:
      return true;
    case Kind::kExact:
      return std::find(alternatives_.begin(), alternatives_.end(), label) !=
             alternatives_.end();
    case Kind::kRegex:
      return std::regex_search(label.begin(), label.end(), *regex_);
  }
  return false;
}

std::string LabelMatcher::to_string() const {
  switch (kind_) {
    case Kind::kWildcard:
      return "__";
    case Kind::kRegex:
      return "/" + source_ + "/";
    case Kind::kExact: {
      std::string out;
      for (const std::string &alt : alternatives_) {
        if (!out.empty()) out += '|';
        out += alt;
      }
      return out;
    }
  }
  return std::string();
}

std::string RelationOp::symbol() const {
  switch (kind) {
    case RelationKind::kImmediateDominance:
      return "<";
    case RelationKind::kDominance:
      return "<<";
    case RelationKind::kUnaryChainDominance:
      return "<<:";
    case RelationKind::kChainDominance:
      return "<+(" + through.to_string() + ")";
    case RelationKind::kChildOf:
      return ">";
    case RelationKind::kSisterPrecedes:
      return "$..";
    case RelationKind::kSisterFollows:
      return "$,,";
  }
  return "?";
}

std::vector<std::string> TreePattern::capture_names() const {
  std::vector<std::string> out;
  for (const NodeSpec &spec : nodes_) {
    if (!spec.capture.empty()) out.push_back(spec.capture);
  }
  return out;
}

bool TreePattern::has_capture(std::string_view name) const {
  for (const NodeSpec &spec : nodes_) {
    if (spec.capture == name) return true;
  }
  return false;
}

std::optional<NodeId> Match::find(std::string_view name) const {
  for (const auto &[capture, id] : bindings) {
    if (capture == name) return id;
  }
  return std::nullopt;
}

bool Match::operator<(const Match &other) const {
  if (matched_root != other.matched_root) {
    return matched_root < other.matched_root;
  }
  const size_t n = std::min(bindings.size(), other.bindings.size());
  for (size_t i = 0; i < n; ++i) {
    if (bindings[i].second != other.bindings[i].second) {
      return bindings[i].second < other.bindings[i].second;
    }
  }
  return bindings.size() < other.bindings.size();
}

// ---------------------------------------------------------------------------
// Compilation.

namespace {

bool IsOperatorChar(char c) {
  switch (c) {
    case '<':
    case '>':
    case '$':
    case '.':
    case ',':
    case ':':
    case '+':
    case '~':
    case '-':
    case '!':
    case '#':
    case '@':
    case '?':
    case '`':
      return true;
    default:
      return false;
  }
}

class PatternParser {
 public:
  PatternParser(std::string_view src, std::vector<NodeSpec> *nodes,
                std::vector<PatternEdge> *edges)
      : src_(src), nodes_(nodes), edges_(edges) {}

  void Parse() {
    SkipSpace();
    if (AtEnd()) Fail("empty pattern");
    ParseExpr();
    SkipSpace();
    if (!AtEnd()) Fail("unexpected '" + std::string(1, Peek()) + "'");
  }

 private:
  bool AtEnd() const { return pos_ >= src_.size(); }
  char Peek() const { return src_[pos_]; }
  void SkipSpace() {
    while (!AtEnd() && std::isspace(static_cast<unsigned char>(Peek()))) {
      ++pos_;
    }
  }
  [[noreturn]] void Fail(const std::string &what) const {
    throw PatternSyntaxError(what, pos_);
  }

  int ParseExpr() {
    const int head = ParseAtom();
    while (true) {
      SkipSpace();
      if (AtEnd() || Peek() == ')') return head;
      RelationOp op = ParseOperator();
      const int target = ParseAtom();
      edges_->push_back(PatternEdge{head, std::move(op), target});
    }
  }

  int ParseAtom() {
    SkipSpace();
    if (AtEnd()) Fail("expected node label");
    if (Peek() == '(') {
      ++pos_;
      const int head = ParseExpr();
      SkipSpace();
      if (AtEnd() || Peek() != ')') Fail("expected ')'");
      ++pos_;
      return head;
    }
    NodeSpec spec;
    spec.label = ParseLabel();
    if (!AtEnd() && Peek() == '=') {
      ++pos_;
      const size_t start = pos_;
      while (!AtEnd() && (std::isalnum(static_cast<unsigned char>(Peek())) ||
                          Peek() == '_')) {
        ++pos_;
      }
      if (pos_ == start) Fail("expected capture name after '='");
      spec.capture = std::string(src_.substr(start, pos_ - start));
      for (const NodeSpec &other : *nodes_) {
        if (other.capture == spec.capture) {
          Fail("duplicate capture '" + spec.capture + "'");
        }
      }
    }
    nodes_->push_back(std::move(spec));
    return static_cast<int>(nodes_->size()) - 1;
  }

  LabelMatcher ParseLabel() {
    if (Peek() == '/') {
      const size_t start = ++pos_;
      while (!AtEnd() && Peek() != '/') ++pos_;
      if (AtEnd()) Fail("unterminated regex");
      std::string source(src_.substr(start, pos_ - start));
      ++pos_;
      try {
        return LabelMatcher::Regex(source);
      } catch (const std::regex_error &) {
        Fail("invalid regex /" + source + "/");
      }
    }
    const size_t start = pos_;
    while (!AtEnd() && Peek() != '(' && Peek() != ')' && Peek() != '=' &&
           !std::isspace(static_cast<unsigned char>(Peek()))) {
      ++pos_;
    }
    std::string text(src_.substr(start, pos_ - start));
    if (text.empty()) Fail("expected node label");
    if (text == "__") return LabelMatcher::Wildcard();
    std::vector<std::string> alternatives;
    size_t from = 0;
    while (true) {
      const size_t bar = text.find('|', from);
      std::string alt = text.substr(from, bar - from);
      if (alt.empty()) Fail("empty label alternative");
      alternatives.push_back(std::move(alt));
      if (bar == std::string::npos) break;
      from = bar + 1;
    }
    return LabelMatcher::Exact(std::move(alternatives));
  }

  RelationOp ParseOperator() {
    const size_t start = pos_;
    while (!AtEnd() && IsOperatorChar(Peek())) ++pos_;
    const std::string op(src_.substr(start, pos_ - start));
    if (op.empty()) {
      Fail("expected relation operator");
    }
    RelationOp out;
    if (op == "<") {
      out.kind = RelationKind::kImmediateDominance;
    } else if (op == "<<") {
      out.kind = RelationKind::kDominance;
    } else if (op == "<<:") {
      out.kind = RelationKind::kUnaryChainDominance;
    } else if (op == ">") {
      out.kind = RelationKind::kChildOf;
    } else if (op == "$..") {
      out.kind = RelationKind::kSisterPrecedes;
    } else if (op == "$,,") {
      out.kind = RelationKind::kSisterFollows;
    } else if (op == "<+") {
      if (AtEnd() || Peek() != '(') throw UnsupportedOperatorError(op);
      ++pos_;
      out.kind = RelationKind::kChainDominance;
      if (AtEnd()) Fail("expected chain label");
      out.through = ParseLabel();
      if (AtEnd() || Peek() != ')') Fail("expected ')' after chain label");
      ++pos_;
    } else {
      throw UnsupportedOperatorError(op);
    }
    return out;
  }

  std::string_view src_;
  size_t pos_ = 0;
  std::vector<NodeSpec> *nodes_;
  std::vector<PatternEdge> *edges_;
};

}  // namespace

TreePattern compile_pattern(std::string_view src) {
  TreePattern pattern;
  pattern.source_ = std::string(src);
  PatternParser(src, &pattern.nodes_, &pattern.edges_).Parse();
  pattern.incoming_.assign(pattern.nodes_.size(), -1);
  for (size_t e = 0; e < pattern.edges_.size(); ++e) {
    pattern.incoming_[pattern.edges_[e].to] = static_cast<int>(e);
  }
  return pattern;
}

// ---------------------------------------------------------------------------
// Evaluation.

bool evaluate_relation(const RelationOp &op, NodeId a, NodeId b,
                       const ParseTree &tree) {
  if (!tree.valid(a)) throw InvalidNodeError(a);
  if (!tree.valid(b)) throw InvalidNodeError(b);
  switch (op.kind) {
    case RelationKind::kImmediateDominance:
      return tree.parent(b) == a;
    case RelationKind::kDominance:
      return tree.dominates(a, b);
    case RelationKind::kUnaryChainDominance: {
      if (!tree.dominates(a, b)) return false;
      for (NodeId x = b; x != a; x = tree.parent(x)) {
        if (tree.child_count(tree.parent(x)) != 1) return false;
      }
      return true;
    }
    case RelationKind::kChainDominance: {
      if (!tree.dominates(a, b)) return false;
      for (NodeId x = tree.parent(b); x != a; x = tree.parent(x)) {
        if (!op.through.matches(tree.label(x))) return false;
      }
      return true;
    }
    case RelationKind::kChildOf:
      return tree.parent(a) == b;
    case RelationKind::kSisterPrecedes:
      return a != b && tree.parent(a) != kNoNode &&
             tree.parent(a) == tree.parent(b) && a < b;
    case RelationKind::kSisterFollows:
      return a != b && tree.parent(a) != kNoNode &&
             tree.parent(a) == tree.parent(b) && a > b;
  }
  return false;
}

namespace {

// Nodes b with op(a, b), in increasing preorder.
void Candidates(const RelationOp &op, NodeId a, const ParseTree &tree,
                std::vector<NodeId> *out) {
  out->clear();
  switch (op.kind) {
    case RelationKind::kImmediateDominance:
      for (NodeId c : tree.children(a)) out->push_back(c);
      break;
    case RelationKind::kDominance:
      for (NodeId b = a + 1; b < tree.subtree_end(a); ++b) out->push_back(b);
      break;
    case RelationKind::kUnaryChainDominance:
      for (NodeId x = a; tree.child_count(x) == 1;) {
        x = tree.children(x)[0];
        out->push_back(x);
      }
      break;
    case RelationKind::kChainDominance: {
      // Preorder walk that only descends through nodes matching the chain
      // label.
      std::vector<NodeId> stack(tree.children(a).rbegin(),
                                tree.children(a).rend());
      while (!stack.empty()) {
        const NodeId x = stack.back();
        stack.pop_back();
        out->push_back(x);
        if (op.through.matches(tree.label(x))) {
          for (auto it = tree.children(x).rbegin();
               it != tree.children(x).rend(); ++it) {
            stack.push_back(*it);
          }
        }
      }
      break;
    }
    case RelationKind::kChildOf:
      if (tree.parent(a) != kNoNode) out->push_back(tree.parent(a));
      break;
    case RelationKind::kSisterPrecedes:
    case RelationKind::kSisterFollows: {
      const NodeId parent = tree.parent(a);
      if (parent == kNoNode) break;
      const bool after = op.kind == RelationKind::kSisterPrecedes;
      for (NodeId s : tree.children(parent)) {
        if (after ? s > a : s < a) out->push_back(s);
      }
      break;
    }
  }
}

class Matcher {
 public:
  Matcher(const TreePattern &pattern, const ParseTree &tree)
      : pattern_(pattern), tree_(tree) {
    const auto &nodes = pattern.nodes();
    label_ok_.resize(nodes.size());
    for (size_t k = 0; k < nodes.size(); ++k) {
      label_ok_[k].resize(tree.size());
      for (NodeId id = 0; id < tree.size(); ++id) {
        label_ok_[k][id] = nodes[k].label.matches(tree.label(id));
      }
    }
    assignment_.assign(nodes.size(), kNoNode);
    scratch_.resize(nodes.size());
  }

  // All matches rooted at root, sorted and deduplicated.
  std::vector<Match> MatchesAt(NodeId root) {
    std::vector<Match> out;
    if (!label_ok_[0][root]) return out;
    assignment_[0] = root;
    Extend(1, &out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

 private:
  void Extend(size_t k, std::vector<Match> *out) {
    const auto &nodes = pattern_.nodes();
    if (k == nodes.size()) {
      Match m;
      m.matched_root = assignment_[0];
      for (size_t i = 0; i < nodes.size(); ++i) {
        if (!nodes[i].capture.empty()) {
          m.bindings.emplace_back(nodes[i].capture, assignment_[i]);
        }
      }
      out->push_back(std::move(m));
      return;
    }
    const PatternEdge &edge = pattern_.edges()[pattern_.incoming_edge(k)];
    std::vector<NodeId> &candidates = scratch_[k];
    Candidates(edge.op, assignment_[edge.from], tree_, &candidates);
    for (NodeId b : candidates) {
      if (!label_ok_[k][b]) continue;
      assignment_[k] = b;
      Extend(k + 1, out);
    }
  }

  const TreePattern &pattern_;
  const ParseTree &tree_;
  std::vector<std::vector<bool>> label_ok_;
  std::vector<NodeId> assignment_;
  std::vector<std::vector<NodeId>> scratch_;
};

}  // namespace

std::optional<Match> find_first(const TreePattern &pattern,
                                const ParseTree &tree) {
  if (tree.empty() || pattern.nodes().empty()) return std::nullopt;
  Matcher matcher(pattern, tree);
  for (NodeId root = 0; root < tree.size(); ++root) {
    std::vector<Match> matches = matcher.MatchesAt(root);
    if (!matches.empty()) return matches.front();
  }
  return std::nullopt;
}

std::vector<Match> find_all(const TreePattern &pattern, const ParseTree &tree) {
  std::vector<Match> out;
  if (tree.empty() || pattern.nodes().empty()) return out;
  Matcher matcher(pattern, tree);
  for (NodeId root = 0; root < tree.size(); ++root) {
    std::vector<Match> matches = matcher.MatchesAt(root);
    out.insert(out.end(), std::make_move_iterator(matches.begin()),
               std::make_move_iterator(matches.end()));
  }
  return out;
}

}  // namespace dissim
