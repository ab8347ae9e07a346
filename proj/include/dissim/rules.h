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

// Transformation rules: a tree pattern plus the rewrite actions that turn a
// match into two or more stand-alone sentences.
//
// Rules are read from a plain-text document of records:
//
//   rule SubordinationPreExtractor
//   family adverbial-clauses
//   rank 2
//   pattern ROOT <<: (S < (SBAR=sbar < (S=ext < (NP $.. VP)) $.. (NP $.. VP)))
//   actions delete(sbar) extract(ext) remainder
//   constituency core-context
//   cue head(sbar)
//   condition cue-known
//   end
//
// Product-building actions emit one sentence each, in the order written:
//
//   remainder                  the input minus every deleted span
//   extract(x)                 the clause at x
//   referent(ref,vp)           ref ("a slave" -> "This slave") + vp; ref may
//                              be a 'literal' such as 'this'
//   referent-whose(ref,wh,vp)  ref's + rest of the wh phrase + vp
//   referent-gap(ref,s)        s with ref re-inserted as the verb's object
//   referent-prep(ref,s,p)     s + p + ref; p is a capture or a 'literal'
//   stub(x)                    "This is/was" + x
//   predicate(subj,x)          subj + "is/was" + x
//   attribution(speaker,vp)    "This is/was what" + speaker + vp
//   shared(coord,conj)         the input with coord replaced by conj
//
// Modifiers: delete(x) removes x and its adjacent commas from every product;
// agree repairs subject-verb agreement in every product. A ":core" or
// ":context" suffix overrides the role of a product; by default the
// remainder is the core of a core-context rule.
//
// cue forms: none | node(x) | head(x) | first(x) | conj(x), optionally
// followed by "keep" to leave the cue words in the products.
// condition forms: cue-known | cue-known-or-empty | title(x).

#ifndef DISSIM_RULES_H_
#define DISSIM_RULES_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dissim/cue_lexicon.h"
#include "dissim/pattern.h"
#include "dissim/tree.h"
#include "dissim/types.h"

namespace dissim {

enum class ActionKind {
  kExtractSpan,
  kDeleteSpan,
  kPrependReferent,
  kAppendStub,
  kCopySharedSubject,
  kAgreementRepair,
};

struct RewriteAction {
  ActionKind kind = ActionKind::kExtractSpan;
  std::string verb;               // spelling in the rule file, e.g. "stub"
  std::vector<std::string> args;  // capture names or 'literals'
  std::optional<EdgeRole> role;

  bool produces_sentence() const {
    return kind != ActionKind::kDeleteSpan &&
           kind != ActionKind::kAgreementRepair;
  }
  bool is_remainder() const { return verb == "remainder"; }
};

enum class CueKind { kNone, kNode, kHead, kFirst, kConjunction };

struct CueSpec {
  CueKind kind = CueKind::kNone;
  std::string capture;
  bool keep = false;
};

enum class ConditionKind { kCueKnown, kCueKnownOrEmpty, kTitle };

struct RuleCondition {
  ConditionKind kind = ConditionKind::kCueKnown;
  std::string capture;
};

struct TransformationRule {
  std::string name;
  Family family = Family::kCoordinateClauses;
  int order_rank = 0;
  TreePattern pattern;
  std::vector<RewriteAction> actions;
  Constituency constituency = Constituency::kCoreContext;
  CueSpec cue;
  std::vector<RuleCondition> conditions;
};

struct Product {
  ParseTree tree;
  EdgeRole role = EdgeRole::kCore;
};

struct RuleApplication {
  std::string rule_name;
  ParseTree input_tree;
  std::vector<Product> products;  // surface order of the rule's actions
  std::vector<std::string> cue_words;  // lowercase
  int remainder = 0;  // index into products of the remainder (or the core)
};

// Reads a rule document without checking the inventory. Throws
// RuleDefinitionError, PatternSyntaxError / UnsupportedOperatorError for bad
// patterns, and DuplicateRuleError.
std::vector<TransformationRule> parse_rules(std::string_view document);

// parse_rules plus the inventory contract: the expected number of rules per
// family (35 in total) and a strict rank order. Returned sorted by rank.
std::vector<TransformationRule> load_rules(std::string_view document);

// The bundled rule set, loaded once.
const std::vector<TransformationRule> &default_rules();

Constituency classify_constituency(const TransformationRule &rule);

// Applies rule to the first match (in find_all order) whose conditions hold.
// Matches whose products would not shrink are skipped and reported through
// diagnostics. Returns nullopt when nothing applies.
std::optional<RuleApplication> apply_rule(
    const TransformationRule &rule, const ParseTree &tree,
    const CueLexicon &lexicon = CueLexicon::Default(),
    std::vector<std::string> *diagnostics = nullptr);

// Word lists used by the rewrite actions and rule conditions.
bool is_title_word(std::string_view token);

}  // namespace dissim

#endif  // DISSIM_RULES_H_
