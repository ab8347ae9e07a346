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

#include "generators.h"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>

namespace dissim::testing {

namespace {

int Uniform(Rng &rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

Node MakeRandomNode(Rng &rng, int &budget,
                    const std::vector<std::string> &labels, int depth,
                    int &word) {
  --budget;
  const std::string &label = labels[Uniform(rng, 0, labels.size() - 1)];
  if (budget <= 0 || depth >= 4 || Uniform(rng, 0, 99) < 35) {
    return Node::Leaf(label, "w" + std::to_string(word++));
  }
  Node n = Node::Phrase(label, {});
  const int k = Uniform(rng, 1, 3);
  for (int i = 0; i < k && budget > 0; ++i) {
    n.children.push_back(MakeRandomNode(rng, budget, labels, depth + 1, word));
  }
  return n;
}

std::string OpString(OracleOp op, const std::string &through) {
  switch (op) {
    case OracleOp::kChild: return "<";
    case OracleOp::kDescendant: return "<<";
    case OracleOp::kUnaryChain: return "<<:";
    case OracleOp::kChain: return "<+(" + through + ")";
    case OracleOp::kParent: return ">";
    case OracleOp::kPrecedes: return "$..";
    case OracleOp::kFollows: return "$,,";
  }
  return "?";
}

// Flat view of a Node tree, built independently of ParseTree.
struct FlatTree {
  std::vector<std::string> labels;
  std::vector<int> parent;
  std::vector<int> index;  // position among siblings
  std::vector<std::vector<int>> children;

  explicit FlatTree(const Node &root) { Add(root, -1, 0); }

  int Add(const Node &node, int p, int i) {
    const int id = static_cast<int>(labels.size());
    labels.push_back(node.label);
    parent.push_back(p);
    index.push_back(i);
    children.emplace_back();
    for (size_t c = 0; c < node.children.size(); ++c) {
      const int child = Add(node.children[c], id, static_cast<int>(c));
      children[id].push_back(child);
    }
    return id;
  }

  int size() const { return static_cast<int>(labels.size()); }
};

bool LabelMatches(const std::string &spec, const std::string &label) {
  if (spec == "__") return true;
  size_t start = 0;
  while (true) {
    const size_t bar = spec.find('|', start);
    if (spec.substr(start, bar - start) == label) return true;
    if (bar == std::string::npos) return false;
    start = bar + 1;
  }
}

bool Holds(const FlatTree &t, OracleOp op, const std::string &through, int a,
           int b) {
  switch (op) {
    case OracleOp::kChild:
      return t.parent[b] == a;
    case OracleOp::kParent:
      return t.parent[a] == b;
    case OracleOp::kDescendant:
      for (int x = t.parent[b]; x != -1; x = t.parent[x]) {
        if (x == a) return true;
      }
      return false;
    case OracleOp::kUnaryChain:
      for (int x = b; t.parent[x] != -1; x = t.parent[x]) {
        if (t.children[t.parent[x]].size() != 1) return false;
        if (t.parent[x] == a) return true;
      }
      return false;
    case OracleOp::kChain:
      for (int x = t.parent[b]; x != -1; x = t.parent[x]) {
        if (x == a) return true;
        if (!LabelMatches(through, t.labels[x])) return false;
      }
      return false;
    case OracleOp::kPrecedes:
      return a != b && t.parent[a] != -1 && t.parent[a] == t.parent[b] &&
             t.index[a] < t.index[b];
    case OracleOp::kFollows:
      return a != b && t.parent[a] != -1 && t.parent[a] == t.parent[b] &&
             t.index[a] > t.index[b];
  }
  return false;
}

}  // namespace

Node RandomTree(Rng &rng, int max_nodes, const std::vector<std::string> &labels) {
  int budget = max_nodes;
  int word = 0;
  return MakeRandomNode(rng, budget, labels, 0, word);
}

std::string PatternAst::ToString() const {
  std::function<std::string(int)> str = [&](int i) {
    const PatternAstNode &n = nodes[i];
    std::string out = n.label;
    if (!n.capture.empty()) out += "=" + n.capture;
    for (const auto &e : n.edges) {
      out += " " + OpString(e.op, e.through) + " (" + str(e.child) + ")";
    }
    return out;
  };
  return str(0);
}

PatternAst RandomPattern(Rng &rng, int max_relations,
                         const std::vector<std::string> &labels) {
  PatternAst p;
  const int relations = Uniform(rng, 0, max_relations);
  auto label = [&]() -> std::string {
    const int r = Uniform(rng, 0, 9);
    if (r == 0) return "__";
    if (r == 1) {
      return labels[Uniform(rng, 0, labels.size() - 1)] + "|" +
             labels[Uniform(rng, 0, labels.size() - 1)];
    }
    return labels[Uniform(rng, 0, labels.size() - 1)];
  };
  for (int i = 0; i <= relations; ++i) {
    PatternAstNode n;
    n.label = label();
    if (Uniform(rng, 0, 9) < 6) n.capture = "c" + std::to_string(i);
    p.nodes.push_back(std::move(n));
    if (i == 0) continue;
    const int from = Uniform(rng, 0, i - 1);
    PatternAstNode::Edge e;
    e.op = static_cast<OracleOp>(Uniform(rng, 0, 6));
    if (e.op == OracleOp::kChain) {
      e.through = labels[Uniform(rng, 0, labels.size() - 1)];
    }
    e.child = i;
    p.nodes[from].edges.push_back(e);
  }
  return p;
}

std::vector<std::string> CaptureOrder(const PatternAst &pattern) {
  std::vector<std::string> out;
  std::function<void(int)> walk = [&](int i) {
    if (!pattern.nodes[i].capture.empty()) out.push_back(pattern.nodes[i].capture);
    for (const auto &e : pattern.nodes[i].edges) walk(e.child);
  };
  walk(0);
  return out;
}

std::vector<std::pair<int, std::vector<int>>> BruteForceMatches(
    const PatternAst &pattern, const Node &tree) {
  const FlatTree t(tree);
  const int k = static_cast<int>(pattern.nodes.size());
  // Incoming edge of every pattern node.
  std::vector<int> from(k, -1);
  std::vector<const PatternAstNode::Edge *> edge(k, nullptr);
  for (int i = 0; i < k; ++i) {
    for (const auto &e : pattern.nodes[i].edges) {
      from[e.child] = i;
      edge[e.child] = &e;
    }
  }
  std::vector<int> capture_nodes;
  for (const std::string &name : CaptureOrder(pattern)) {
    for (int i = 0; i < k; ++i) {
      if (pattern.nodes[i].capture == name) capture_nodes.push_back(i);
    }
  }
  std::set<std::pair<int, std::vector<int>>> found;
  std::vector<int> assign(k, -1);
  // Plain odometer over all k-tuples of tree nodes.
  std::vector<int> tuple(k, 0);
  while (true) {
    bool ok = true;
    for (int i = 0; i < k && ok; ++i) {
      if (!LabelMatches(pattern.nodes[i].label, t.labels[tuple[i]])) ok = false;
    }
    for (int i = 1; i < k && ok; ++i) {
      if (!Holds(t, edge[i]->op, edge[i]->through, tuple[from[i]], tuple[i])) {
        ok = false;
      }
    }
    if (ok) {
      std::vector<int> caps;
      for (int c : capture_nodes) caps.push_back(tuple[c]);
      found.emplace(tuple[0], std::move(caps));
    }
    int pos = k - 1;
    while (pos >= 0 && ++tuple[pos] == t.size()) {
      tuple[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return {found.begin(), found.end()};
}

// ---------------------------------------------------------------------------
// Sentence generator.

namespace {

const std::vector<std::string> kNames = {"Anna",  "Peter", "Maria", "John",
                                         "Laura", "David", "Sarah", "Thomas",
                                         "Emma",  "Lucas"};
const std::vector<std::string> kSurnames = {"Smith", "Miller", "Brown",
                                            "Jones", "Garcia"};
const std::vector<std::string> kTitles = {"President", "Senator", "Professor",
                                          "Governor", "Judge"};
const std::vector<std::string> kPeople = {"teacher", "doctor",  "farmer",
                                          "engineer", "artist", "pilot",
                                          "student", "lawyer"};
const std::vector<std::string> kThings = {"book",   "letter", "house", "car",
                                          "report", "plan",   "song",  "garden",
                                          "bridge", "painting"};
// Past tense and base form.
const std::vector<std::pair<std::string, std::string>> kVerbs = {
    {"wrote", "write"},     {"sold", "sell"},   {"painted", "paint"},
    {"found", "find"},      {"visited", "visit"}, {"built", "build"},
    {"bought", "buy"},      {"signed", "sign"}, {"opened", "open"},
    {"finished", "finish"}};
const std::vector<std::string> kPresent = {"visit", "like", "own", "rent",
                                           "admire", "watch"};
const std::vector<std::string> kIntransitive = {"arrived", "left", "smiled",
                                                "waited", "laughed"};
const std::vector<std::string> kCues = {"although", "because", "when",
                                        "if",       "after",   "before",
                                        "while",    "since",   "unless"};
const std::vector<std::string> kPlaces = {"museum", "school", "hotel",
                                          "library", "factory"};
const std::vector<std::string> kPlaceVerbs = {"worked", "lived", "stayed",
                                              "studied"};
const std::vector<std::string> kCities = {"Paris", "Berlin", "Boston",
                                          "Madrid", "Vienna"};
const std::vector<std::string> kDays = {"Monday", "Tuesday", "Friday",
                                        "Sunday"};
const std::vector<std::string> kYears = {"1830", "1921", "1968", "1990",
                                         "2004"};
const std::vector<std::string> kMoods = {"tired", "happy", "angry", "nervous"};
const std::vector<std::string> kSpeakers = {"official", "spokesman", "minister",
                                            "witness"};
const std::vector<std::string> kRelatives = {"brother", "sister", "friend"};

Node L(const std::string &tag, const std::string &word) {
  return Node::Leaf(tag, word);
}
Node P(const std::string &label, std::vector<Node> children) {
  return Node::Phrase(label, std::move(children));
}

// S children of a clause, for templates that splice a clause.
std::vector<Node> Parts(const Node &clause) { return clause.children; }

}  // namespace

const std::string &SentenceGenerator::Pick(const std::vector<std::string> &w) {
  return w[Uniform(rng_, 0, static_cast<int>(w.size()) - 1)];
}

bool SentenceGenerator::Coin(double p) {
  return std::uniform_real_distribution<double>(0, 1)(rng_) < p;
}

int SentenceGenerator::TemplateCount() { return 24; }

Node SentenceGenerator::ProperName() { return P("NP", {L("NNP", Pick(kNames))}); }

Node SentenceGenerator::CommonNP(bool definite) {
  return P("NP", {L("DT", definite ? "the" : "a"), L("NN", Pick(kPeople))});
}

Node SentenceGenerator::Subject(bool allow_pronoun) {
  const int r = Uniform(rng_, 0, allow_pronoun ? 2 : 1);
  if (r == 0) return ProperName();
  if (r == 1) return CommonNP();
  return P("NP", {L("PRP", Coin() ? "she" : "he")});
}

Node SentenceGenerator::Object() {
  return P("NP", {L("DT", Coin() ? "the" : "a"), L("NN", Pick(kThings))});
}

Node SentenceGenerator::PastVP() {
  const auto &v = kVerbs[Uniform(rng_, 0, kVerbs.size() - 1)];
  if (Coin(0.2)) {
    return P("VP", {L("MD", "will"), P("VP", {L("VB", v.second), Object()})});
  }
  return P("VP", {L("VBD", v.first), Object()});
}

Node SentenceGenerator::TemporalPP(bool initial) {
  if (initial || Coin()) {
    return P("PP", {L("IN", "in"), P("NP", {L("CD", Pick(kYears))})});
  }
  return P("PP", {L("IN", "on"), P("NP", {L("NNP", Pick(kDays))})});
}

Node SentenceGenerator::SimpleClause(bool allow_pronoun) {
  return P("S", {Subject(allow_pronoun), PastVP()});
}

Node SentenceGenerator::Clause(int nesting) {
  if (nesting > 0 && Coin(0.4)) {
    static const int kEmbeddable[] = {0, 1, 2, 16, 18, 20, 21};
    return Build(kEmbeddable[Uniform(rng_, 0, 6)], nesting - 1);
  }
  return SimpleClause();
}

Node SentenceGenerator::Build(int index, int nesting) {
  switch (index) {
    case 0:  // coordinate clauses
      return P("S", {Clause(nesting), L("CC", Coin() ? "and" : "but"),
                     Clause(nesting)});
    case 1: {  // preposed adverbial clause
      std::vector<Node> kids = {P("SBAR", {L("IN", Pick(kCues)), Clause(nesting)}),
                                L(",", ",")};
      for (Node &n : Parts(SimpleClause())) kids.push_back(std::move(n));
      return P("S", std::move(kids));
    }
    case 2: {  // postposed adverbial clause
      Node vp = PastVP();
      vp.children.push_back(P("SBAR", {L("IN", Pick(kCues)), Clause(nesting)}));
      return P("S", {Subject(), std::move(vp)});
    }
    case 3:  // medial adverbial clause
      return P("S", {Subject(false), L(",", ","),
                     P("SBAR", {L("IN", Pick({"although", "because", "when", "if"})),
                                SimpleClause()}),
                     L(",", ","), PastVP()});
    case 4: {  // preposed purpose
      const auto &v = kVerbs[Uniform(rng_, 0, kVerbs.size() - 1)];
      std::vector<Node> kids = {
          P("S", {P("VP", {L("TO", "to"), P("VP", {L("VB", v.second), Object()})})}),
          L(",", ",")};
      for (Node &n : Parts(SimpleClause())) kids.push_back(std::move(n));
      return P("S", std::move(kids));
    }
    case 5: {  // postposed purpose
      const auto &v = kVerbs[Uniform(rng_, 0, kVerbs.size() - 1)];
      Node vp = P("VP", {L("VBD", kVerbs[Uniform(rng_, 0, kVerbs.size() - 1)].first),
                         Object()});
      vp.children.push_back(
          P("S", {P("VP", {L("TO", "to"), P("VP", {L("VB", v.second), Object()})})}));
      return P("S", {Subject(), std::move(vp)});
    }
    case 6:  // non-defining subject relative
      return P("S", {P("NP", {ProperName(), L(",", ","),
                              P("SBAR", {P("WHNP", {L("WP", "who")}),
                                         P("S", {PastVP()})}),
                              L(",", ",")}),
                     PastVP()});
    case 7:  // whose
      return P("S", {P("NP", {ProperName(), L(",", ","),
                              P("SBAR", {P("WHNP", {L("WP$", "whose"),
                                                    L("NN", Pick(kRelatives))}),
                                         P("S", {PastVP()})}),
                              L(",", ",")}),
                     PastVP()});
    case 8: {  // non-defining object relative
      const std::string thing = Pick(kThings);
      return P("S",
               {Subject(), P("VP", {L("VBD", kVerbs[Uniform(rng_, 0, 9)].first),
                                    P("NP", {P("NP", {L("DT", "the"), L("NN", thing)}),
                                             L(",", ","),
                                             P("SBAR", {P("WHNP", {L("WDT", "which")}),
                                                        P("S", {P("NP", {L("PRP", "he")}),
                                                                P("VP", {L("VBD", kVerbs[Uniform(rng_, 0, 9)].first)})})})})})});
    }
    case 9:  // where
      return P("S", {P("NP", {P("NP", {L("DT", "the"), L("NN", Pick(kPlaces))}),
                              L(",", ","),
                              P("SBAR", {P("WHADVP", {L("WRB", "where")}),
                                         P("S", {P("NP", {L("PRP", "she")}),
                                                 P("VP", {L("VBD", Pick(kPlaceVerbs))})})}),
                              L(",", ",")}),
                     P("VP", {L("VBD", Pick({"closed", "opened", "burned"}))})});
    case 10:  // reduced relative
      return P("S", {P("NP", {ProperName(), L(",", ","),
                              P("VP", {L("VBN", Pick({"born", "raised"})),
                                       P("PP", {L("IN", "in"),
                                                P("NP", {L("NNP", Pick(kCities))})})}),
                              L(",", ",")}),
                     PastVP()});
    case 11:  // defining relative in subject position
      return P("S", {P("NP", {CommonNP(),
                              P("SBAR", {P("WHNP", {L("WP", "who")}),
                                         P("S", {PastVP()})})}),
                     P("VP", {L("VBD", Pick(kIntransitive))})});
    case 12:  // defining relative in object position
      return P("S", {Subject(),
                     P("VP", {L("VBD", Pick({"met", "called", "thanked"})),
                              P("NP", {CommonNP(),
                                       P("SBAR", {P("WHNP", {L("WP", "who")}),
                                                  P("S", {PastVP()})})})})});
    case 13:  // quote before speaker
      return P("S", {L("``", "``"), Clause(nesting), L(",", ","), L("''", "''"),
                     P("NP", {L("DT", "the"), L("NN", Pick(kSpeakers))}),
                     P("VP", {L("VBD", "said")})});
    case 14:  // speaker before quote
      return P("S", {P("NP", {L("DT", "the"), L("NN", Pick(kSpeakers))}),
                     P("VP", {L("VBD", "said"), L(",", ","), L("``", "``"),
                              Clause(nesting), L("''", "''")})});
    case 15:  // indirect speech
      return P("S", {Subject(),
                     P("VP", {L("VBD", Pick({"said", "claimed", "reported"})),
                              P("SBAR", {L("IN", "that"), Clause(nesting)})})});
    case 16:  // coordinate verb phrases
      return P("S", {Subject(), P("VP", {PastVP(), L("CC", "and"), PastVP()})});
    case 17: {  // coordinate subject noun phrases
      const std::string a = Pick(kNames);
      std::string b = Pick(kNames);
      while (b == a) b = Pick(kNames);
      return P("S", {P("NP", {P("NP", {L("NNP", a)}), L("CC", "and"),
                              P("NP", {L("NNP", b)})}),
                     P("VP", {L("VBP", Pick(kPresent)), Object()})});
    }
    case 18:  // non-restrictive apposition
      return P("S", {P("NP", {ProperName(), L(",", ","), CommonNP(false),
                              L(",", ",")}),
                     PastVP()});
    case 19:  // restrictive apposition
      return P("S", {P("NP", {L("NNP", Pick(kTitles)), L("NNP", Pick(kSurnames))}),
                     PastVP()});
    case 20: {  // initial prepositional phrase
      std::vector<Node> kids = {TemporalPP(true), L(",", ",")};
      for (Node &n : Parts(SimpleClause())) kids.push_back(std::move(n));
      return P("S", std::move(kids));
    }
    case 21: {  // trailing prepositional phrase
      const auto &v = kVerbs[Uniform(rng_, 0, kVerbs.size() - 1)];
      return P("S", {Subject(), P("VP", {L("VBD", v.first), Object(),
                                         TemporalPP()})});
    }
    case 22:  // preposed adjectival phrase
      return P("S", {P("ADJP", {L("JJ", Pick(kMoods))}), L(",", ","),
                     P("NP", {L("PRP", Coin() ? "she" : "he")}), PastVP()});
    case 23:  // lead noun phrase
      return P("S", {P("NP", {L("DT", "a"), L("JJ", Pick({"famous", "young", "retired"})),
                              L("NN", Pick(kPeople))}),
                     L(",", ","), P("NP", {L("PRP", Coin() ? "she" : "he")}),
                     PastVP()});
    default:
      return SimpleClause();
  }
}

void CapitalizeFirstWord(Node &sentence) {
  std::function<bool(Node &)> visit = [&](Node &n) {
    if (n.is_leaf()) {
      if (!n.token.empty() && std::isalpha(static_cast<unsigned char>(n.token[0]))) {
        n.token[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(n.token[0])));
        return true;
      }
      return false;
    }
    for (Node &c : n.children) {
      if (visit(c)) return true;
    }
    return false;
  };
  visit(sentence);
}

Node SentenceGenerator::Sentence(int template_index, int nesting) {
  Node s = Build(template_index, nesting);
  s.children.push_back(L(".", "."));
  Node root = P("ROOT", {std::move(s)});
  CapitalizeFirstWord(root);
  return root;
}

Node SentenceGenerator::Sentence(int nesting) {
  return Sentence(Uniform(rng_, 0, TemplateCount() - 1), nesting);
}

// ---------------------------------------------------------------------------
// Random discourse trees.

namespace {

DiscourseTree RandomLeaf(Rng &rng) {
  if (Uniform(rng, 0, 9) == 0) {
    return DiscourseTree::ErrorLeaf("(S (NP broken", "unexpected end of input");
  }
  const std::vector<std::string> tags = {"NP", "VP", "DT", "NN", "S", "PP"};
  Node body = RandomTree(rng, 8, tags);
  return DiscourseTree::Leaf(ParseTree(Node::Phrase("ROOT", {std::move(body)})));
}

}  // namespace

DiscourseTree RandomDiscourseTree(Rng &rng, int max_depth) {
  if (max_depth <= 0 || Uniform(rng, 0, 2) == 0) return RandomLeaf(rng);
  DiscourseTree node;
  node.kind = Uniform(rng, 0, 1) == 0 ? DiscourseKind::kCoordination
                                      : DiscourseKind::kSubordination;
  node.relation = kAllRelations[Uniform(rng, 0, kAllRelations.size() - 1)];
  node.rule = Uniform(rng, 0, 3) == 0 ? "" : "Rule" + std::to_string(Uniform(rng, 0, 40));
  const int n = Uniform(rng, 2, 3);
  const int core = Uniform(rng, 0, n - 1);
  for (int i = 0; i < n; ++i) {
    const EdgeRole role = node.kind == DiscourseKind::kCoordination || i == core
                              ? EdgeRole::kCore
                              : EdgeRole::kContext;
    node.children.push_back({role, RandomDiscourseTree(rng, max_depth - 1)});
  }
  return node;
}

std::vector<std::string> RandomTokens(Rng &rng, int max_len, int vocabulary) {
  std::vector<std::string> out(Uniform(rng, 0, max_len));
  for (std::string &t : out) t = "t" + std::to_string(Uniform(rng, 0, vocabulary - 1));
  return out;
}

}  // namespace dissim::testing
