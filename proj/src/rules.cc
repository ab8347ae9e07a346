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

#include "dissim/rules.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <set>
#include <unordered_set>

#include "dissim/assets.h"
#include "dissim/errors.h"
#include "text_util.h"

namespace dissim {

namespace {

// ---------------------------------------------------------------------------
// Word classes.

bool IsVerbTag(std::string_view tag) {
  return tag == "MD" || tag.starts_with("VB");
}

bool IsNounTag(std::string_view tag) {
  return tag == "NN" || tag == "NNS" || tag == "NNP" || tag == "NNPS";
}

bool IsClauseLabel(std::string_view label) {
  return label == "S" || label == "SINV" || label == "SQ" || label == "SBARQ";
}

bool IsCommaLabel(std::string_view label) {
  return label == "," || label == ":";
}

bool IsQuoteLabel(std::string_view label) {
  return label == "``" || label == "''";
}

bool IsPunctuationLabel(std::string_view label) {
  return label == "," || label == ":" || label == "." || IsQuoteLabel(label) ||
         label == "-LRB-" || label == "-RRB-";
}

// ---------------------------------------------------------------------------
// Rule document reader.

struct ActionSignature {
  ActionKind kind;
  size_t arity;
};

const std::map<std::string, ActionSignature, std::less<>> &ActionTable() {
  static const auto *table = new std::map<std::string, ActionSignature,
                                          std::less<>>{
      {"remainder", {ActionKind::kExtractSpan, 0}},
      {"extract", {ActionKind::kExtractSpan, 1}},
      {"delete", {ActionKind::kDeleteSpan, 1}},
      {"referent", {ActionKind::kPrependReferent, 2}},
      {"referent-whose", {ActionKind::kPrependReferent, 3}},
      {"referent-gap", {ActionKind::kPrependReferent, 2}},
      {"referent-prep", {ActionKind::kPrependReferent, 3}},
      {"stub", {ActionKind::kAppendStub, 1}},
      {"predicate", {ActionKind::kAppendStub, 2}},
      {"attribution", {ActionKind::kAppendStub, 2}},
      {"shared", {ActionKind::kCopySharedSubject, 2}},
      {"agree", {ActionKind::kAgreementRepair, 0}},
  };
  return *table;
}

bool IsLiteral(std::string_view arg) {
  return arg.size() >= 2 && arg.front() == '\'' && arg.back() == '\'';
}

std::string LiteralText(std::string_view arg) {
  return std::string(arg.substr(1, arg.size() - 2));
}

// Splits "name(a,b)" into name and args.
bool SplitCall(std::string_view text, std::string *name,
               std::vector<std::string> *args) {
  const size_t open = text.find('(');
  if (open == std::string_view::npos) {
    *name = std::string(text);
    args->clear();
    return text.find(')') == std::string_view::npos;
  }
  if (text.back() != ')') return false;
  *name = std::string(text.substr(0, open));
  args->clear();
  const std::string_view inner = text.substr(open + 1, text.size() - open - 2);
  if (Trim(inner).empty()) return true;
  for (const std::string &a : SplitOn(inner, ',')) {
    const std::string arg = Trim(a);
    if (arg.empty()) return false;
    args->push_back(arg);
  }
  return true;
}

// Splits an action line on whitespace outside parentheses.
std::vector<std::string> SplitActions(std::string_view line) {
  std::vector<std::string> out;
  std::string current;
  int depth = 0;
  for (char c : line) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (std::isspace(static_cast<unsigned char>(c)) && depth == 0) {
      if (!current.empty()) out.push_back(std::move(current));
      current.clear();
      continue;
    }
    if (!std::isspace(static_cast<unsigned char>(c))) current.push_back(c);
  }
  if (!current.empty()) out.push_back(std::move(current));
  return out;
}

class RuleReader {
 public:
  explicit RuleReader(std::string_view document) : document_(document) {}

  std::vector<TransformationRule> Read() {
    std::vector<TransformationRule> rules;
    std::set<std::string> names;
    bool in_rule = false;
    int line_no = 0;
    for (const std::string &raw : SplitLines(document_)) {
      ++line_no;
      line_no_ = line_no;
      const std::string line = Trim(raw);
      if (line.empty() || line[0] == '#') continue;
      const size_t space = line.find_first_of(" \t");
      const std::string key = line.substr(0, space);
      const std::string value =
          space == std::string::npos ? "" : Trim(line.substr(space));
      if (key == "rule") {
        if (in_rule) Fail("record for '" + current_.name + "' lacks 'end'");
        if (value.empty()) Fail("rule without a name");
        Reset(value);
        in_rule = true;
        continue;
      }
      if (!in_rule) Fail("'" + key + "' outside a rule record");
      if (key == "end") {
        TransformationRule rule = Finish();
        if (!names.insert(rule.name).second) throw DuplicateRuleError(rule.name);
        rules.push_back(std::move(rule));
        in_rule = false;
      } else if (key == "family") {
        const auto family = parse_family(value);
        if (!family) Fail("unknown family '" + value + "'");
        current_.family = *family;
        seen_.insert("family");
      } else if (key == "rank") {
        int rank = 0;
        auto [end, ec] =
            std::from_chars(value.data(), value.data() + value.size(), rank);
        if (ec != std::errc() || end != value.data() + value.size()) {
          Fail("bad rank '" + value + "'");
        }
        current_.order_rank = rank;
        seen_.insert("rank");
      } else if (key == "pattern") {
        current_.pattern = compile_pattern(value);
        seen_.insert("pattern");
      } else if (key == "actions") {
        action_text_ = value;
        seen_.insert("actions");
      } else if (key == "constituency") {
        const auto c = parse_constituency(value);
        if (!c) Fail("unknown constituency '" + value + "'");
        current_.constituency = *c;
        seen_.insert("constituency");
      } else if (key == "cue") {
        cue_text_ = value;
        seen_.insert("cue");
      } else if (key == "condition") {
        condition_texts_.push_back(value);
      } else {
        Fail("unknown field '" + key + "'");
      }
    }
    if (in_rule) Fail("record for '" + current_.name + "' lacks 'end'");
    return rules;
  }

 private:
  [[noreturn]] void Fail(const std::string &message) const {
    throw RuleDefinitionError("rules line " + std::to_string(line_no_) + ": " +
                              message);
  }

  void Reset(const std::string &name) {
    current_ = TransformationRule();
    current_.name = name;
    seen_.clear();
    action_text_.clear();
    cue_text_.clear();
    condition_texts_.clear();
  }

  void RequireCapture(const std::string &name) const {
    if (!current_.pattern.has_capture(name)) {
      Fail("rule " + current_.name + " references unknown capture '" + name +
           "'");
    }
  }

  TransformationRule Finish() {
    for (const char *field :
         {"family", "rank", "pattern", "actions", "constituency"}) {
      if (!seen_.count(field)) {
        Fail("rule " + current_.name + " is missing '" + field + "'");
      }
    }
    if (current_.constituency != classify_constituency(current_)) {
      Fail("rule " + current_.name + " declares " +
           constituency_id(current_.constituency) + " but its family is " +
           constituency_id(classify_constituency(current_)));
    }
    ParseActions();
    ParseCue();
    for (const std::string &text : condition_texts_) ParseCondition(text);
    return std::move(current_);
  }

  void ParseActions() {
    int sentences = 0;
    for (const std::string &token : SplitActions(action_text_)) {
      std::string body = token;
      RewriteAction action;
      const size_t colon = body.rfind(':');
      if (colon != std::string::npos && body.find(')', colon) == std::string::npos) {
        const auto role = parse_edge_role(body.substr(colon + 1));
        if (!role) Fail("bad role in action '" + token + "'");
        action.role = role;
        body = body.substr(0, colon);
      }
      if (!SplitCall(body, &action.verb, &action.args)) {
        Fail("malformed action '" + token + "'");
      }
      const auto it = ActionTable().find(action.verb);
      if (it == ActionTable().end()) Fail("unknown action '" + action.verb + "'");
      if (action.args.size() != it->second.arity) {
        Fail("action '" + action.verb + "' takes " +
             std::to_string(it->second.arity) + " argument(s)");
      }
      action.kind = it->second.kind;
      for (size_t i = 0; i < action.args.size(); ++i) {
        const std::string &arg = action.args[i];
        if (IsLiteral(arg)) {
          const bool allowed = (action.verb == "referent-prep" && i == 2) ||
                               (action.verb == "referent" && i == 0);
          if (!allowed) {
            Fail("literal not allowed in '" + token + "'");
          }
          continue;
        }
        RequireCapture(arg);
      }
      if (action.role && !action.produces_sentence()) {
        Fail("role on non-product action '" + token + "'");
      }
      if (action.produces_sentence()) ++sentences;
      current_.actions.push_back(std::move(action));
    }
    if (sentences < 2) {
      Fail("rule " + current_.name + " must produce at least two sentences");
    }
  }

  void ParseCue() {
    CueSpec cue;
    std::vector<std::string> words = SplitWords(cue_text_);
    if (words.empty() || words[0] == "none") {
      if (words.size() > 1) Fail("bad cue '" + cue_text_ + "'");
      current_.cue = cue;
      return;
    }
    if (words.size() > 2 || (words.size() == 2 && words[1] != "keep" &&
                             words[1] != "strip")) {
      Fail("bad cue '" + cue_text_ + "'");
    }
    cue.keep = words.size() == 2 && words[1] == "keep";
    std::string kind;
    std::vector<std::string> args;
    if (!SplitCall(words[0], &kind, &args) || args.size() != 1) {
      Fail("bad cue '" + cue_text_ + "'");
    }
    if (kind == "node") {
      cue.kind = CueKind::kNode;
    } else if (kind == "head") {
      cue.kind = CueKind::kHead;
    } else if (kind == "first") {
      cue.kind = CueKind::kFirst;
    } else if (kind == "conj") {
      cue.kind = CueKind::kConjunction;
    } else {
      Fail("unknown cue kind '" + kind + "'");
    }
    RequireCapture(args[0]);
    cue.capture = args[0];
    current_.cue = cue;
  }

  void ParseCondition(const std::string &text) {
    RuleCondition condition;
    std::string kind;
    std::vector<std::string> args;
    if (!SplitCall(text, &kind, &args)) Fail("bad condition '" + text + "'");
    if (kind == "cue-known" && args.empty()) {
      condition.kind = ConditionKind::kCueKnown;
    } else if (kind == "cue-known-or-empty" && args.empty()) {
      condition.kind = ConditionKind::kCueKnownOrEmpty;
    } else if (kind == "title" && args.size() == 1) {
      RequireCapture(args[0]);
      condition.kind = ConditionKind::kTitle;
      condition.capture = args[0];
    } else {
      Fail("bad condition '" + text + "'");
    }
    current_.conditions.push_back(condition);
  }

  std::string_view document_;
  int line_no_ = 0;
  TransformationRule current_;
  std::set<std::string> seen_;
  std::string action_text_;
  std::string cue_text_;
  std::vector<std::string> condition_texts_;
};

// ---------------------------------------------------------------------------
// Node helpers.

Node &FirstLeaf(Node &node) {
  Node *n = &node;
  while (!n->children.empty()) n = &n->children.front();
  return *n;
}

void LowercaseFirst(std::string &s) {
  if (!s.empty()) {
    s[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(s[0])));
  }
}

bool IsEmptyPhrase(const Node &n) {
  return n.children.empty() && n.token.empty();
}

bool IsEdgeJunk(const Node &n) {
  return n.is_leaf() && (IsCommaLabel(n.label) || n.label == "CC");
}

bool IsTrailingMark(const Node &n) {
  return n.is_leaf() && (n.label == "." || n.label == "''");
}

// Drops emptied phrases and dangling conjunctions/commas left behind by
// deletions.
void Cleanup(Node &node) {
  if (node.is_leaf()) return;
  for (Node &c : node.children) Cleanup(c);
  auto &kids = node.children;
  std::erase_if(kids, IsEmptyPhrase);
  while (!kids.empty() && IsEdgeJunk(kids.front())) kids.erase(kids.begin());
  while (true) {
    int last = static_cast<int>(kids.size()) - 1;
    while (last >= 0 && IsTrailingMark(kids[last])) --last;
    if (last < 0 || !IsEdgeJunk(kids[last])) break;
    kids.erase(kids.begin() + last);
  }
  for (size_t i = 0; i + 1 < kids.size();) {
    if (kids[i].is_leaf() && kids[i + 1].is_leaf() &&
        IsCommaLabel(kids[i].label) && IsCommaLabel(kids[i + 1].label)) {
      kids.erase(kids.begin() + static_cast<long>(i) + 1);
    } else {
      ++i;
    }
  }
}

void DropQuotes(Node &node) {
  std::erase_if(node.children,
                [](const Node &c) { return c.is_leaf() && IsQuoteLabel(c.label); });
  for (Node &c : node.children) DropQuotes(c);
}

const Node *LastLeaf(const Node &node) {
  const Node *n = &node;
  while (!n->children.empty()) n = &n->children.back();
  return n;
}

// Wraps a product as (ROOT (S ... (. .))).
Node AsSentence(Node node) {
  if (node.label == "ROOT") {
    if (node.children.size() == 1) {
      node = std::move(node.children.front());
    } else {
      node.label = "S";
    }
  }
  if (!IsClauseLabel(node.label)) {
    node = Node::Phrase("S", {std::move(node)});
  }
  const Node *last = LastLeaf(node);
  if (!is_terminal_punctuation(last->token)) {
    node.children.push_back(Node::Leaf(".", "."));
  }
  return Node::Phrase("ROOT", {std::move(node)});
}

bool PluralNP(const Node &np) {
  if (np.is_leaf()) {
    if (np.label == "NNS" || np.label == "NNPS") return true;
    if (np.label == "PRP") {
      const std::string w = ToLower(np.token);
      return w == "we" || w == "they" || w == "you";
    }
    return false;
  }
  for (const Node &c : np.children) {
    if (c.is_leaf() && c.label == "CC") return true;
  }
  for (auto it = np.children.rbegin(); it != np.children.rend(); ++it) {
    if (it->is_leaf() && (IsNounTag(it->label) || it->label == "PRP")) {
      return PluralNP(*it);
    }
  }
  for (const Node &c : np.children) {
    if (c.label == "NP") return PluralNP(c);
  }
  return false;
}

bool FirstPersonSingular(const Node &np) {
  const Node *n = &np;
  while (!n->children.empty() && n->children.size() == 1) n = &n->children[0];
  return n->is_leaf() && n->token == "I";
}

Node *FirstVerbNode(Node &vp) {
  for (Node &c : vp.children) {
    if (c.is_leaf()) {
      if (IsVerbTag(c.label)) return &c;
    } else if (c.label == "VP") {
      if (Node *v = FirstVerbNode(c)) return v;
    }
  }
  return nullptr;
}

std::string ThirdPersonSingular(const std::string &verb) {
  const std::string lower = ToLower(verb);
  if (lower == "are") return "is";
  if (lower == "have") return "has";
  if (lower == "do") return "does";
  if (lower.empty()) return verb;
  auto ends = [&](std::string_view s) { return lower.ends_with(s); };
  if (ends("s") || ends("sh") || ends("ch") || ends("x") || ends("z") ||
      ends("o")) {
    return verb + "es";
  }
  if (lower.size() >= 2 && lower.back() == 'y' &&
      std::string_view("aeiou").find(lower[lower.size() - 2]) ==
          std::string_view::npos) {
    return verb.substr(0, verb.size() - 1) + "ies";
  }
  return verb + "s";
}

void RepairAgreement(Node &root) {
  Node *s = &root;
  if (s->label == "ROOT" && !s->children.empty()) s = &s->children.front();
  Node *subject = nullptr;
  Node *vp = nullptr;
  for (Node &c : s->children) {
    if (subject == nullptr && c.label == "NP") {
      subject = &c;
    } else if (subject != nullptr && c.label == "VP") {
      vp = &c;
      break;
    }
  }
  if (subject == nullptr || vp == nullptr) return;
  if (PluralNP(*subject) || FirstPersonSingular(*subject)) return;
  Node *verb = FirstVerbNode(*vp);
  if (verb == nullptr) return;
  if (verb->label == "VBP") {
    verb->token = ThirdPersonSingular(verb->token);
    verb->label = "VBZ";
  } else if (ToLower(verb->token) == "were") {
    verb->token = "was";
  }
}

Node BeVerb(bool past, bool plural, bool first_person) {
  if (past) return Node::Leaf("VBD", plural ? "were" : "was");
  if (first_person) return Node::Leaf("VBP", "am");
  return plural ? Node::Leaf("VBP", "are") : Node::Leaf("VBZ", "is");
}

Node AsPredicate(Node node) {
  if (node.is_leaf()) {
    const std::string label = IsNounTag(node.label) ? "NP"
                              : node.label.starts_with("JJ") ? "ADJP"
                                                             : "NP";
    return Node::Phrase(label, {std::move(node)});
  }
  return node;
}

// ---------------------------------------------------------------------------
// Application of one match.

struct Cue {
  std::vector<std::string> words;
  std::vector<NodeId> leaves;
};

class Applier {
 public:
  Applier(const TransformationRule &rule, const ParseTree &tree,
          const Match &match)
      : rule_(rule), tree_(tree), match_(match) {
    const std::vector<NodeId> leaves = tree_.leaves();
    first_leaf_ = leaves.empty() ? kNoNode : leaves.front();
  }

  NodeId Capture(const std::string &name) const {
    const auto id = match_.find(name);
    if (!id) {
      throw RuleDefinitionError("rule " + rule_.name + ": capture '" + name +
                                "' is not bound by the match");
    }
    return *id;
  }

  Cue HarvestCue() const {
    Cue cue;
    const CueSpec &spec = rule_.cue;
    if (spec.kind == CueKind::kNone) return cue;
    const NodeId x = Capture(spec.capture);
    switch (spec.kind) {
      case CueKind::kNone:
        break;
      case CueKind::kNode:
        cue.leaves = tree_.leaves(x);
        break;
      case CueKind::kHead:
        for (NodeId c : tree_.children(x)) {
          if (IsClauseLabel(tree_.label(c))) break;
          for (NodeId l : tree_.leaves(c)) cue.leaves.push_back(l);
        }
        break;
      case CueKind::kFirst:
        cue.leaves.push_back(tree_.leaves(x).front());
        break;
      case CueKind::kConjunction: {
        const NodeId p = tree_.parent(x);
        if (p == kNoNode) break;
        const auto sisters = tree_.children(p);
        for (int i = tree_.child_index(x) - 1; i >= 0; --i) {
          if (tree_.label(sisters[i]) == "CC") {
            cue.leaves = tree_.leaves(sisters[i]);
            break;
          }
        }
        break;
      }
    }
    for (NodeId l : cue.leaves) cue.words.push_back(ToLower(tree_.token(l)));
    return cue;
  }

  bool ConditionsHold(const Cue &cue, const CueLexicon &lexicon) const {
    for (const RuleCondition &c : rule_.conditions) {
      switch (c.kind) {
        case ConditionKind::kCueKnown:
          if (cue.words.empty() ||
              lexicon.classify(cue.words, rule_.family).source ==
                  CueSource::kDefault) {
            return false;
          }
          break;
        case ConditionKind::kCueKnownOrEmpty:
          if (!cue.words.empty() &&
              lexicon.classify(cue.words, rule_.family).source ==
                  CueSource::kDefault) {
            return false;
          }
          break;
        case ConditionKind::kTitle: {
          const std::vector<NodeId> leaves = tree_.leaves(Capture(c.capture));
          if (leaves.empty() || !is_title_word(tree_.token(leaves.front()))) {
            return false;
          }
          break;
        }
      }
    }
    return true;
  }

  void Exclude(const Cue &cue) {
    for (const RewriteAction &a : rule_.actions) {
      if (a.kind != ActionKind::kDeleteSpan) continue;
      const NodeId x = Capture(a.args[0]);
      excluded_.insert(x);
      const NodeId p = tree_.parent(x);
      if (p == kNoNode) continue;
      const auto sisters = tree_.children(p);
      const int i = tree_.child_index(x);
      if (i > 0 && IsCommaLabel(tree_.label(sisters[i - 1]))) {
        excluded_.insert(sisters[i - 1]);
      }
      if (i + 1 < static_cast<int>(sisters.size()) &&
          IsCommaLabel(tree_.label(sisters[i + 1]))) {
        excluded_.insert(sisters[i + 1]);
      }
    }
    if (!rule_.cue.keep) {
      for (NodeId l : cue.leaves) excluded_.insert(l);
    }
  }

  Node Copy(NodeId id) const { return tree_.to_node(id, excluded_); }

  // A copy placed away from the start of the sentence loses its
  // sentence-initial capital.
  Node CopyMoved(NodeId id) const {
    Node node = Copy(id);
    if (!tree_.leaves(id).empty() && tree_.leaves(id).front() == first_leaf_) {
      Node &leaf = FirstLeaf(node);
      if (leaf.label != "NNP" && leaf.label != "NNPS" && leaf.token != "I") {
        LowercaseFirst(leaf.token);
      }
    }
    return node;
  }

  Node CopyReplacing(NodeId id, NodeId target, NodeId replacement) const {
    if (id == target) return Copy(replacement);
    if (tree_.is_leaf(id)) return Node::Leaf(tree_.label(id), tree_.token(id));
    Node node = Node::Phrase(tree_.label(id), {});
    for (NodeId c : tree_.children(id)) {
      if (c != target && excluded_.count(c)) continue;
      node.children.push_back(CopyReplacing(c, target, replacement));
    }
    return node;
  }

  // "a slave" -> "this slave"; other noun phrases are copied.
  Node ReferentNP(NodeId ref, bool initial) const {
    const auto kids = tree_.children(ref);
    if (!kids.empty() && tree_.is_leaf(kids[0]) && tree_.label(kids[0]) == "DT") {
      NodeId head = kNoNode;
      for (NodeId c : kids) {
        if (tree_.is_leaf(c) && IsNounTag(tree_.label(c))) head = c;
      }
      if (head != kNoNode &&
          (tree_.label(head) == "NN" || tree_.label(head) == "NNS")) {
        std::string dem = tree_.label(head) == "NNS" ? "these" : "this";
        if (initial) dem[0] = 'T';
        return Node::Phrase(
            "NP", {Node::Leaf("DT", dem),
                   Node::Leaf(tree_.label(head), tree_.token(head))});
      }
    }
    return initial ? Copy(ref) : CopyMoved(ref);
  }

  static Node *DeepestVP(Node &node) {
    Node *vp = nullptr;
    for (Node &c : node.children) {
      if (c.label == "VP") vp = &c;
    }
    if (vp == nullptr) return nullptr;
    Node *deeper = DeepestVP(*vp);
    return deeper != nullptr ? deeper : vp;
  }

  bool PastClause(NodeId x) const {
    NodeId s = tree_.parent(x);
    while (s != kNoNode && !IsClauseLabel(tree_.label(s))) s = tree_.parent(s);
    if (s == kNoNode) s = tree_.root();
    for (NodeId c : tree_.children(s)) {
      if (tree_.label(c) != "VP") continue;
      Node vp = tree_.to_node(c);
      const Node *verb = FirstVerbNode(vp);
      return verb != nullptr && (verb->label == "VBD" || verb->label == "VBN");
    }
    return false;
  }

  Node This() const { return Node::Phrase("NP", {Node::Leaf("DT", "This")}); }

  Node Build(const RewriteAction &a) const {
    const std::string &v = a.verb;
    if (v == "remainder") return Copy(tree_.root());
    if (v == "extract") return Copy(Capture(a.args[0]));
    if (v == "shared") {
      return CopyReplacing(tree_.root(), Capture(a.args[0]),
                           Capture(a.args[1]));
    }
    if (v == "stub") {
      const NodeId x = Capture(a.args[0]);
      return Node::Phrase(
          "S", {This(), Node::Phrase("VP", {BeVerb(PastClause(x), false, false),
                                            AsPredicate(CopyMoved(x))})});
    }
    if (v == "predicate") {
      const NodeId subj = Capture(a.args[0]);
      const NodeId x = Capture(a.args[1]);
      Node subject = Copy(subj);
      Node be = BeVerb(PastClause(x), PluralNP(subject),
                       FirstPersonSingular(subject));
      return Node::Phrase(
          "S", {std::move(subject),
                Node::Phrase("VP", {std::move(be), AsPredicate(CopyMoved(x))})});
    }
    if (v == "attribution") {
      const NodeId speaker = Capture(a.args[0]);
      const NodeId say = Capture(a.args[1]);
      Node vp = Copy(say);
      DropQuotes(vp);
      Cleanup(vp);
      Node say_vp = vp;
      const Node *verb = FirstVerbNode(say_vp);
      const bool past =
          verb != nullptr && (verb->label == "VBD" || verb->label == "VBN");
      Node what = Node::Phrase(
          "SBAR", {Node::Phrase("WHNP", {Node::Leaf("WP", "what")}),
                   Node::Phrase("S", {CopyMoved(speaker), std::move(vp)})});
      return Node::Phrase(
          "S", {This(), Node::Phrase("VP", {BeVerb(past, false, false),
                                            std::move(what)})});
    }
    if (v == "referent") {
      Node ref;
      if (IsLiteral(a.args[0])) {
        std::string word = LiteralText(a.args[0]);
        if (!word.empty()) word[0] = static_cast<char>(std::toupper(word[0]));
        ref = Node::Phrase("NP", {Node::Leaf("DT", word)});
      } else {
        ref = ReferentNP(Capture(a.args[0]), true);
      }
      return Node::Phrase("S", {std::move(ref), Copy(Capture(a.args[1]))});
    }
    if (v == "referent-whose") {
      const NodeId wh = Capture(a.args[1]);
      Node np = Node::Phrase(
          "NP", {Copy(Capture(a.args[0])), Node::Leaf("POS", "'s")});
      for (NodeId c : tree_.children(wh)) {
        if (tree_.label(c) == "WP$") continue;
        np.children.push_back(Copy(c));
      }
      return Node::Phrase("S", {std::move(np), Copy(Capture(a.args[2]))});
    }
    if (v == "referent-gap") {
      Node s = Copy(Capture(a.args[1]));
      Node ref = ReferentNP(Capture(a.args[0]), false);
      Node *vp = DeepestVP(s);
      if (vp == nullptr) {
        s.children.push_back(std::move(ref));
        return s;
      }
      size_t at = 0;
      for (size_t i = 0; i < vp->children.size(); ++i) {
        if (vp->children[i].is_leaf() && IsVerbTag(vp->children[i].label)) {
          at = i + 1;
        }
      }
      vp->children.insert(vp->children.begin() + static_cast<long>(at),
                          std::move(ref));
      return s;
    }
    if (v == "referent-prep") {
      Node s = Copy(Capture(a.args[1]));
      Node prep = IsLiteral(a.args[2])
                      ? Node::Leaf("IN", LiteralText(a.args[2]))
                      : CopyMoved(Capture(a.args[2]));
      Node pp = Node::Phrase(
          "PP", {std::move(prep), ReferentNP(Capture(a.args[0]), false)});
      Node *vp = DeepestVP(s);
      (vp != nullptr ? vp : &s)->children.push_back(std::move(pp));
      return s;
    }
    throw RuleDefinitionError("rule " + rule_.name + ": action '" + v +
                              "' builds no sentence");
  }

 private:
  const TransformationRule &rule_;
  const ParseTree &tree_;
  const Match &match_;
  std::unordered_set<NodeId> excluded_;
  NodeId first_leaf_ = kNoNode;
};

int ContentTokens(const ParseTree &tree) {
  int n = 0;
  for (NodeId l : tree.leaves()) {
    if (!IsPunctuationLabel(tree.label(l))) ++n;
  }
  return n;
}

std::vector<EdgeRole> AssignRoles(const TransformationRule &rule) {
  std::vector<EdgeRole> roles;
  bool explicit_core = false;
  for (const RewriteAction &a : rule.actions) {
    if (a.role == EdgeRole::kCore) explicit_core = true;
  }
  for (const RewriteAction &a : rule.actions) {
    if (!a.produces_sentence()) continue;
    if (rule.constituency == Constituency::kCoreCore) {
      roles.push_back(EdgeRole::kCore);
    } else if (a.role) {
      roles.push_back(*a.role);
    } else if (a.is_remainder() && !explicit_core) {
      roles.push_back(EdgeRole::kCore);
    } else {
      roles.push_back(EdgeRole::kContext);
    }
  }
  return roles;
}

}  // namespace

std::vector<TransformationRule> parse_rules(std::string_view document) {
  return RuleReader(document).Read();
}

std::vector<TransformationRule> load_rules(std::string_view document) {
  std::vector<TransformationRule> rules = parse_rules(document);
  std::map<Family, int> counts;
  for (const TransformationRule &r : rules) ++counts[r.family];
  for (Family f : kAllFamilies) {
    const int have = counts.count(f) ? counts[f] : 0;
    if (have != expected_rule_count(f)) {
      throw RuleInventoryError(
          "family " + family_id(f) + " has " + std::to_string(have) +
              " rule(s), expected " + std::to_string(expected_rule_count(f)),
          family_id(f));
    }
  }
  std::stable_sort(rules.begin(), rules.end(),
                   [](const TransformationRule &a, const TransformationRule &b) {
                     return a.order_rank < b.order_rank;
                   });
  for (size_t i = 1; i < rules.size(); ++i) {
    if (rules[i].order_rank == rules[i - 1].order_rank) {
      throw RuleInventoryError("rules " + rules[i - 1].name + " and " +
                                   rules[i].name + " share rank " +
                                   std::to_string(rules[i].order_rank),
                               family_id(rules[i].family));
    }
  }
  return rules;
}

const std::vector<TransformationRule> &default_rules() {
  static const auto *rules =
      new std::vector<TransformationRule>(load_rules(default_rules_document()));
  return *rules;
}

Constituency classify_constituency(const TransformationRule &rule) {
  switch (rule.family) {
    case Family::kCoordinateClauses:
    case Family::kCoordinateVerbPhrases:
    case Family::kCoordinateNounPhrases:
      return Constituency::kCoreCore;
    default:
      return Constituency::kCoreContext;
  }
}

std::optional<RuleApplication> apply_rule(const TransformationRule &rule,
                                          const ParseTree &tree,
                                          const CueLexicon &lexicon,
                                          std::vector<std::string> *diagnostics) {
  if (tree.empty()) return std::nullopt;
  const std::vector<EdgeRole> roles = AssignRoles(rule);
  const bool agree =
      std::any_of(rule.actions.begin(), rule.actions.end(),
                  [](const RewriteAction &a) {
                    return a.kind == ActionKind::kAgreementRepair;
                  });
  const int input_content = ContentTokens(tree);

  for (const Match &match : find_all(rule.pattern, tree)) {
    Applier applier(rule, tree, match);
    const Cue cue = applier.HarvestCue();
    if (!applier.ConditionsHold(cue, lexicon)) continue;
    applier.Exclude(cue);

    RuleApplication app;
    app.rule_name = rule.name;
    app.input_tree = tree;
    app.cue_words = cue.words;
    app.remainder = -1;
    std::string rejected;
    size_t slot = 0;
    for (const RewriteAction &a : rule.actions) {
      if (!a.produces_sentence()) continue;
      Node node = applier.Build(a);
      Cleanup(node);
      if (IsEmptyPhrase(node) || node.children.empty()) {
        rejected = "product " + std::to_string(slot) + " is empty";
        break;
      }
      node = AsSentence(std::move(node));
      if (agree) RepairAgreement(node);
      const EdgeRole role = roles[slot];
      if (a.is_remainder()) app.remainder = static_cast<int>(slot);
      app.products.push_back({ParseTree(node), role});
      ++slot;
    }
    if (rejected.empty() && app.remainder < 0) {
      for (size_t i = 0; i < app.products.size(); ++i) {
        if (app.products[i].role == EdgeRole::kCore) {
          app.remainder = static_cast<int>(i);
          break;
        }
      }
    }
    if (rejected.empty()) {
      for (size_t i = 0; i < app.products.size(); ++i) {
        const int content = ContentTokens(app.products[i].tree);
        if (content == 0) {
          rejected = "product " + std::to_string(i) + " has no words";
        } else if (static_cast<int>(i) == app.remainder &&
                   content >= input_content) {
          rejected = "remainder does not shrink";
        } else if (content > input_content ||
                   app.products[i].tree == tree) {
          rejected = "product " + std::to_string(i) + " does not shrink";
        }
        if (!rejected.empty()) break;
      }
    }
    if (!rejected.empty()) {
      if (diagnostics != nullptr) {
        diagnostics->push_back("rule " + rule.name + " at node " +
                               std::to_string(match.matched_root) +
                               " rejected: " + rejected);
      }
      continue;
    }
    return app;
  }
  return std::nullopt;
}

bool is_title_word(std::string_view token) {
  static const std::set<std::string> kTitles = {
      "president", "senator",   "king",      "queen",     "prince",
      "princess",  "governor",  "mayor",     "judge",     "general",
      "chairman",  "minister",  "dr.",       "professor", "pope",
      "sir",       "captain",   "colonel",   "secretary", "chancellor",
      "premier",   "ambassador", "bishop",   "lord",      "lady",
      "congressman", "representative",
  };
  return kTitles.count(ToLower(token)) > 0;
}

}  // namespace dissim
