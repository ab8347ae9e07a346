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

#include "dissim/tree.h"

#include <cctype>
#include <functional>

#include "dissim/errors.h"

namespace dissim {

ParseTree::ParseTree(const Node &root) {
  Flatten(root, kNoNode, 0);
  const int n = size();
  std::vector<int> counts(n, 0);
  for (NodeId id = 1; id < n; ++id) ++counts[parents_[id]];
  child_begin_.assign(n + 1, 0);
  for (int i = 0; i < n; ++i) child_begin_[i + 1] = child_begin_[i] + counts[i];
  child_ids_.assign(child_begin_[n], kNoNode);
  std::vector<int> fill(child_begin_.begin(), child_begin_.end() - 1);
  // Preorder visits children of a node in surface order.
  for (NodeId id = 1; id < n; ++id) child_ids_[fill[parents_[id]]++] = id;
}

void ParseTree::Flatten(const Node &node, NodeId parent, int index) {
  const NodeId id = size();
  labels_.push_back(node.label);
  tokens_.push_back(node.is_leaf() ? node.token : std::string());
  parents_.push_back(parent);
  sibling_index_.push_back(index);
  ends_.push_back(kNoNode);
  for (size_t i = 0; i < node.children.size(); ++i) {
    Flatten(node.children[i], id, static_cast<int>(i));
  }
  ends_[id] = size();
}

std::vector<NodeId> ParseTree::leaves(NodeId id) const {
  std::vector<NodeId> out;
  for (NodeId i = id; i < ends_[id]; ++i) {
    if (is_leaf(i)) out.push_back(i);
  }
  return out;
}

std::vector<std::string> ParseTree::tokens(NodeId id) const {
  std::vector<std::string> out;
  for (NodeId leaf : leaves(id)) out.push_back(tokens_[leaf]);
  return out;
}

TokenSpan ParseTree::span(NodeId id) const {
  TokenSpan out;
  out.source_ids = leaves(id);
  for (NodeId leaf : out.source_ids) out.tokens.push_back(tokens_[leaf]);
  return out;
}

int ParseTree::leaf_count() const {
  int count = 0;
  for (NodeId id = 0; id < size(); ++id) count += is_leaf(id) ? 1 : 0;
  return count;
}

Node ParseTree::to_node(NodeId id) const {
  static const std::unordered_set<NodeId> kNone;
  return to_node(id, kNone);
}

Node ParseTree::to_node(NodeId id,
                        const std::unordered_set<NodeId> &excluded) const {
  if (!valid(id)) throw InvalidNodeError(id);
  Node out;
  out.label = labels_[id];
  if (is_leaf(id)) {
    out.token = tokens_[id];
    return out;
  }
  for (NodeId child : children(id)) {
    if (excluded.count(child)) continue;
    out.children.push_back(to_node(child, excluded));
  }
  return out;
}

bool ParseTree::operator==(const ParseTree &other) const {
  return labels_ == other.labels_ && tokens_ == other.tokens_ &&
         parents_ == other.parents_;
}

// ---------------------------------------------------------------------------
// Bracketed input.

namespace {

class BracketReader {
 public:
  explicit BracketReader(std::string_view text) : text_(text) {}

  Node ReadTree() {
    SkipSpace();
    Expect('(');
    SkipSpace();
    Node node;
    if (Peek() != '(') node.label = ReadAtom();
    // "( (S ...))" as written by some treebank tools.
    if (node.label.empty()) node.label = "ROOT";
    SkipSpace();
    if (AtEnd()) Fail("unexpected end of input");
    if (Peek() == ')') Fail("constituent without children or token");
    if (Peek() == '(') {
      while (true) {
        SkipSpace();
        if (AtEnd()) Fail("unexpected end of input");
        if (Peek() == ')') break;
        if (Peek() != '(') Fail("token mixed with constituents");
        node.children.push_back(ReadTree());
      }
    } else {
      node.token = ReadAtom();
      SkipSpace();
      if (AtEnd()) Fail("unexpected end of input");
      if (Peek() != ')') Fail("expected ')' after token");
    }
    Expect(')');
    return node;
  }

  void ExpectEnd() {
    SkipSpace();
    if (!AtEnd()) Fail("trailing characters after tree");
  }

 private:
  bool AtEnd() const { return pos_ >= text_.size(); }
  char Peek() const { return text_[pos_]; }

  void SkipSpace() {
    while (!AtEnd() && std::isspace(static_cast<unsigned char>(Peek()))) {
      ++pos_;
    }
  }

  void Expect(char c) {
    if (AtEnd()) Fail("unexpected end of input");
    if (Peek() != c) Fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string ReadAtom() {
    const size_t start = pos_;
    while (!AtEnd() && Peek() != '(' && Peek() != ')' &&
           !std::isspace(static_cast<unsigned char>(Peek()))) {
      ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  // Offsets are reported 1-based, so end of input for "(S (NP" is 7.
  [[noreturn]] void Fail(const std::string &what) const {
    throw MalformedInputError(what, pos_ + 1);
  }

  std::string_view text_;
  size_t pos_ = 0;
};

std::string EscapeAtom(const std::string &atom) {
  std::string out;
  for (char c : atom) {
    if (c == '(') {
      out += "-LRB-";
    } else if (c == ')') {
      out += "-RRB-";
    } else {
      out += c;
    }
  }
  return out;
}

void Serialize(const Node &node, std::string *out) {
  *out += '(';
  *out += EscapeAtom(node.label);
  if (node.is_leaf()) {
    *out += ' ';
    *out += EscapeAtom(node.token);
  } else {
    for (const Node &child : node.children) {
      *out += ' ';
      Serialize(child, out);
    }
  }
  *out += ')';
}

}  // namespace

ParseTree parse_ptb(std::string_view text) {
  bool blank = true;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
  }
  if (blank) throw EmptyInputError();
  BracketReader reader(text);
  Node root = reader.ReadTree();
  reader.ExpectEnd();
  return ParseTree(root);
}

std::string serialize_ptb(const Node &node) {
  std::string out;
  Serialize(node, &out);
  return out;
}

std::string serialize_ptb(const ParseTree &tree) {
  if (tree.empty()) return std::string();
  return serialize_ptb(tree.to_node());
}

// ---------------------------------------------------------------------------
// Detokenization.

std::string unescape_token(std::string_view token) {
  if (token == "-LRB-") return "(";
  if (token == "-RRB-") return ")";
  if (token == "-LSB-") return "[";
  if (token == "-RSB-") return "]";
  if (token == "-LCB-") return "{";
  if (token == "-RCB-") return "}";
  if (token == "``" || token == "''") return "\"";
  if (token == "`") return "'";
  return std::string(token);
}

bool is_terminal_punctuation(std::string_view token) {
  return token == "." || token == "?" || token == "!";
}

namespace {

enum class Attach { kNone, kLeft, kRight };

bool IsClitic(std::string_view t) {
  if (t == "n't" || t == "N'T") return true;
  if (t.size() >= 2 && t[0] == '\'' &&
      std::isalpha(static_cast<unsigned char>(t[1]))) {
    return true;
  }
  return false;
}

// How a raw (still escaped) token attaches to its neighbours.
Attach AttachmentOf(std::string_view t, bool *open_plain_quote) {
  if (t == "," || t == "." || t == ";" || t == ":" || t == "?" || t == "!" ||
      t == "%" || t == "-RRB-" || t == "-RSB-" || t == "-RCB-" || t == ")" ||
      t == "]" || t == "}" || t == "''" || t == "'" || IsClitic(t)) {
    return Attach::kLeft;
  }
  if (t == "-LRB-" || t == "-LSB-" || t == "-LCB-" || t == "(" || t == "[" ||
      t == "{" || t == "``" || t == "`" || t == "$") {
    return Attach::kRight;
  }
  if (t == "\"") {
    *open_plain_quote = !*open_plain_quote;
    return *open_plain_quote ? Attach::kRight : Attach::kLeft;
  }
  return Attach::kNone;
}

bool IsTrailingJunk(std::string_view t) {
  return is_terminal_punctuation(t) || t == "," || t == ";" || t == ":";
}

}  // namespace

std::string realize(std::span<const std::string> tokens, bool capitalize,
                    std::string_view terminator) {
  if (tokens.empty()) throw EmptySpanError();
  size_t begin = 0;
  size_t end = tokens.size();
  while (begin < end && tokens[begin] == ",") ++begin;
  while (end > begin && IsTrailingJunk(tokens[end - 1])) --end;

  std::string out;
  bool glue_next = true;  // no space before the first token
  bool open_quote = false;
  for (size_t i = begin; i < end; ++i) {
    const Attach attach = AttachmentOf(tokens[i], &open_quote);
    if (!glue_next && attach != Attach::kLeft) out += ' ';
    out += unescape_token(tokens[i]);
    glue_next = attach == Attach::kRight;
  }
  while (!out.empty() && is_terminal_punctuation(out.substr(out.size() - 1))) {
    out.pop_back();
  }
  if (capitalize) {
    for (char &c : out) {
      if (std::isalpha(static_cast<unsigned char>(c))) {
        c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
        break;
      }
    }
  }
  out += terminator;
  return out;
}

std::string realize(const TokenSpan &span, bool capitalize,
                    std::string_view terminator) {
  return realize(std::span<const std::string>(span.tokens), capitalize,
                 terminator);
}

}  // namespace dissim
