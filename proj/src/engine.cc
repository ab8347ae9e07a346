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

#include "dissim/engine.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

#include "dissim/errors.h"
#include "text_util.h"

namespace dissim {

std::string discourse_kind_id(DiscourseKind kind) {
  switch (kind) {
    case DiscourseKind::kLeaf: return "leaf";
    case DiscourseKind::kCoordination: return "coordination";
    case DiscourseKind::kSubordination: return "subordination";
  }
  return "leaf";
}

bool DiscourseTree::operator==(const DiscourseTree &other) const {
  return kind == other.kind && relation == other.relation &&
         rule == other.rule && children == other.children &&
         tree == other.tree && text == other.text && error == other.error;
}

DiscourseTree DiscourseTree::Leaf(ParseTree tree) {
  DiscourseTree leaf;
  leaf.text = realize_sentence(tree);
  leaf.tree = std::move(tree);
  return leaf;
}

DiscourseTree DiscourseTree::ErrorLeaf(std::string raw, std::string error) {
  DiscourseTree leaf;
  leaf.text = std::move(raw);
  leaf.error = error.empty() ? "error" : std::move(error);
  return leaf;
}

std::vector<std::string> surface_tokens(const ParseTree &tree) {
  std::vector<std::string> out;
  if (tree.empty()) return out;
  for (const std::string &t : tree.tokens()) out.push_back(unescape_token(t));
  return out;
}

std::string realize_sentence(const ParseTree &tree) {
  const std::vector<std::string> raw = tree.empty() ? std::vector<std::string>()
                                                    : tree.tokens();
  if (raw.empty()) return "";
  std::string terminator = ".";
  for (auto it = raw.rbegin(); it != raw.rend(); ++it) {
    if (is_terminal_punctuation(*it)) {
      terminator = *it;
      break;
    }
    if (*it != "''" && *it != "\"" && *it != "'") break;
  }
  std::vector<std::string> tokens = surface_tokens(tree);
  try {
    return realize(tokens, true, terminator);
  } catch (const EmptySpanError &) {
    return "";
  }
}

ParseTree normalize_sentence(const ParseTree &tree) {
  if (tree.empty() || tree.label(tree.root()) == "ROOT") return tree;
  return ParseTree(Node::Phrase("ROOT", {tree.to_node()}));
}

namespace {

class Simplifier {
 public:
  Simplifier(const std::vector<TransformationRule> &rules,
             const CueLexicon &lexicon, SimplifyTrace *trace, int limit)
      : rules_(rules), lexicon_(lexicon), trace_(trace), limit_(limit) {}

  DiscourseTree Run(const ParseTree &tree, int depth) {
    if (trace_ != nullptr) trace_->max_depth = std::max(trace_->max_depth, depth);
    if (depth >= limit_) {
      Note("depth limit " + std::to_string(limit_) + " reached");
      return DiscourseTree::Leaf(tree);
    }
    for (const TransformationRule &rule : rules_) {
      std::vector<std::string> rejected;
      auto app = apply_rule(rule, tree, lexicon_, &rejected);
      for (std::string &r : rejected) Note(std::move(r));
      if (!app) continue;
      if (trace_ != nullptr) ++trace_->steps;
      DiscourseTree node;
      node.kind = classify_constituency(rule) == Constituency::kCoreCore
                      ? DiscourseKind::kCoordination
                      : DiscourseKind::kSubordination;
      node.relation = lexicon_.classify_relation(app->cue_words, rule.family);
      node.rule = rule.name;
      for (Product &p : app->products) {
        node.children.push_back({p.role, Run(p.tree, depth + 1)});
      }
      return node;
    }
    return DiscourseTree::Leaf(tree);
  }

 private:
  void Note(std::string message) {
    if (trace_ != nullptr) trace_->diagnostics.push_back(std::move(message));
  }

  const std::vector<TransformationRule> &rules_;
  const CueLexicon &lexicon_;
  SimplifyTrace *trace_;
  int limit_;
};

}  // namespace

DiscourseTree simplify(const ParseTree &sentence,
                       const std::vector<TransformationRule> &rules,
                       const CueLexicon &lexicon, SimplifyTrace *trace) {
  const ParseTree tree = normalize_sentence(sentence);
  const int limit = std::max(1, tree.empty() ? 0 : tree.leaf_count());
  if (trace != nullptr) trace->depth_limit = limit;
  return Simplifier(rules, lexicon, trace, limit).Run(tree, 0);
}

void check_discourse_tree(const DiscourseTree &tree) {
  if (tree.is_leaf()) {
    if (!tree.children.empty()) throw Error("leaf with children");
    return;
  }
  int core = 0;
  for (const DiscourseEdge &e : tree.children) {
    if (e.role == EdgeRole::kCore) ++core;
    check_discourse_tree(e.child);
  }
  const int n = static_cast<int>(tree.children.size());
  if (tree.kind == DiscourseKind::kCoordination && (n < 2 || core != n)) {
    throw Error("coordination needs two or more core children");
  }
  if (tree.kind == DiscourseKind::kSubordination && (core != 1 || n < 2)) {
    throw Error("subordination needs one core and one or more context children");
  }
}

std::vector<DocumentResult> simplify_corpus(
    size_t count, const TreeSource &fetch, const RawText &raw_text,
    const std::vector<TransformationRule> &rules, const CueLexicon &lexicon,
    int jobs) {
  std::vector<DocumentResult> results(count);
  auto work = [&](size_t i) {
    DocumentResult &r = results[i];
    try {
      r.input = normalize_sentence(fetch(i));
      if (r.input.empty()) throw EmptyInputError();
      r.source = realize_sentence(r.input);
      SimplifyTrace trace;
      r.tree = simplify(r.input, rules, lexicon, &trace);
      r.diagnostics = std::move(trace.diagnostics);
    } catch (const RuleDefinitionError &) {
      throw;
    } catch (const std::exception &e) {
      r.input = ParseTree();
      r.source = Trim(raw_text(i));
      r.tree = DiscourseTree::ErrorLeaf(r.source, e.what());
    }
  };
  const size_t workers =
      std::min<size_t>(count, static_cast<size_t>(std::max(1, jobs)));
  if (workers <= 1) {
    for (size_t i = 0; i < count; ++i) work(i);
    return results;
  }
  std::atomic<size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  std::vector<std::thread> pool;
  for (size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      while (!failed) {
        const size_t i = next.fetch_add(1);
        if (i >= count) break;
        try {
          work(i);
        } catch (...) {
          if (!failed.exchange(true)) failure = std::current_exception();
        }
      }
    });
  }
  for (std::thread &t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return results;
}

std::vector<DocumentResult> simplify_corpus(
    const std::vector<std::string> &records,
    const std::vector<TransformationRule> &rules, const CueLexicon &lexicon,
    int jobs) {
  return simplify_corpus(
      records.size(), [&](size_t i) { return parse_ptb(records[i]); },
      [&](size_t i) { return records[i]; }, rules, lexicon, jobs);
}

std::vector<std::string> split_ptb_records(std::string_view text) {
  std::vector<std::string> records;
  std::string current;
  int depth = 0;
  auto flush = [&] {
    const std::string t = Trim(current);
    if (!t.empty()) records.push_back(t);
    current.clear();
    depth = 0;
  };
  for (const std::string &line : SplitLines(text)) {
    if (Trim(line).empty()) {
      flush();
      continue;
    }
    if (depth > 0 && !line.empty() && line[0] == '(') flush();
    for (char c : line) {
      current.push_back(c);
      if (c == '(') ++depth;
      if (c == ')') {
        --depth;
        if (depth <= 0) {
          // A stray ')' makes the record malformed; end it here either way.
          flush();
        }
      }
    }
    if (depth == 0) {
      flush();
    } else {
      current.push_back('\n');
    }
  }
  flush();
  return records;
}

}  // namespace dissim
