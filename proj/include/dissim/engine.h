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

// Recursive driver: applies the ordered rule set to a sentence until no rule
// matches and assembles the resulting discourse tree.

#ifndef DISSIM_ENGINE_H_
#define DISSIM_ENGINE_H_

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "dissim/cue_lexicon.h"
#include "dissim/rules.h"
#include "dissim/tree.h"
#include "dissim/types.h"

namespace dissim {

enum class DiscourseKind { kLeaf, kCoordination, kSubordination };

std::string discourse_kind_id(DiscourseKind kind);  // "leaf", ...

struct DiscourseEdge;

// A discourse tree node. Internal nodes (Coordination / Subordination) carry
// a relation and children; leaves carry a simplified sentence.
struct DiscourseTree {
  DiscourseKind kind = DiscourseKind::kLeaf;
  RhetoricalRelation relation = RhetoricalRelation::kUnknown;
  std::string rule;  // rule that produced an internal node
  std::vector<DiscourseEdge> children;

  ParseTree tree;      // leaf only
  std::string text;    // leaf only: realized sentence
  std::string error;   // leaf only: set for annotated pass-through failures

  bool is_leaf() const { return kind == DiscourseKind::kLeaf; }
  bool operator==(const DiscourseTree &other) const;

  static DiscourseTree Leaf(ParseTree tree);
  static DiscourseTree ErrorLeaf(std::string raw, std::string error);
};

struct DiscourseEdge {
  EdgeRole role = EdgeRole::kCore;
  DiscourseTree child;

  bool operator==(const DiscourseEdge &other) const = default;
};

// Surface string of a sentence tree: unescaped leaves, detokenized,
// capitalized, ending in the tree's own terminator or '.'.
std::string realize_sentence(const ParseTree &tree);

// Leaf tokens with PTB escapes undone.
std::vector<std::string> surface_tokens(const ParseTree &tree);

struct SimplifyTrace {
  int steps = 0;        // rule applications
  int max_depth = 0;    // deepest recursion level reached
  int depth_limit = 0;  // token count of the input
  std::vector<std::string> diagnostics;
};

// Wraps a bare S (or any non-ROOT top node) under ROOT.
ParseTree normalize_sentence(const ParseTree &tree);

DiscourseTree simplify(const ParseTree &sentence,
                       const std::vector<TransformationRule> &rules,
                       const CueLexicon &lexicon,
                       SimplifyTrace *trace = nullptr);
inline DiscourseTree simplify(const ParseTree &sentence) {
  return simplify(sentence, default_rules(), CueLexicon::Default());
}

// Throws Error when the tree violates a structural invariant (a
// Subordination without exactly one core child, a Coordination with a
// context child or fewer than two children).
void check_discourse_tree(const DiscourseTree &tree);

struct DocumentResult {
  std::string source;  // realized input, or the raw record on failure
  ParseTree input;     // empty on failure
  DiscourseTree tree;
  std::vector<std::string> diagnostics;
  bool ok() const { return tree.error.empty(); }
};

// Produces the tree for item i; may throw, in which case the item becomes an
// annotated pass-through leaf (raw_text(i) is used as its text).
using TreeSource = std::function<ParseTree(size_t)>;
using RawText = std::function<std::string(size_t)>;

// Simplifies count items with up to jobs worker threads; results keep input
// order and do not depend on jobs.
std::vector<DocumentResult> simplify_corpus(
    size_t count, const TreeSource &fetch, const RawText &raw_text,
    const std::vector<TransformationRule> &rules, const CueLexicon &lexicon,
    int jobs = 1);

// Bracketed records from a treebank file.
std::vector<DocumentResult> simplify_corpus(
    const std::vector<std::string> &records,
    const std::vector<TransformationRule> &rules, const CueLexicon &lexicon,
    int jobs = 1);

// Splits treebank text into bracketed records. A record ends when its
// parentheses balance, at a blank line, or when a new line starts with '('
// in the first column while a record is still open; text outside any
// bracketing becomes a record of its own.
std::vector<std::string> split_ptb_records(std::string_view text);

}  // namespace dissim

#endif  // DISSIM_ENGINE_H_
