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

#include "dissim/output.h"

#include "dissim/errors.h"
#include "text_util.h"

namespace dissim {

namespace {

using nlohmann::json;

class Flattener {
 public:
  explicit Flattener(FlatDocument *doc) : doc_(doc) {}

  std::vector<int> Visit(const DiscourseTree &node, int layer) {
    if (node.is_leaf()) {
      SimplifiedSentence s;
      s.id = static_cast<int>(doc_->sentences.size()) + 1;
      s.context_layer = layer;
      s.text = node.text;
      s.tokens = node.tree.empty() ? SplitWords(node.text)
                                   : surface_tokens(node.tree);
      doc_->sentences.push_back(std::move(s));
      return {static_cast<int>(doc_->sentences.size())};
    }
    std::vector<std::vector<int>> heads;
    for (const DiscourseEdge &e : node.children) {
      heads.push_back(
          Visit(e.child, layer + (e.role == EdgeRole::kContext ? 1 : 0)));
    }
    std::vector<int> out;
    if (node.kind == DiscourseKind::kCoordination) {
      for (size_t i = 0; i < heads.size(); ++i) {
        for (int h : heads[i]) {
          for (size_t j = 0; j < heads.size(); ++j) {
            if (j == i) continue;
            for (int t : heads[j]) AddLink(h, node.relation, t);
          }
        }
        out.insert(out.end(), heads[i].begin(), heads[i].end());
      }
      return out;
    }
    size_t core = 0;
    for (size_t i = 0; i < node.children.size(); ++i) {
      if (node.children[i].role == EdgeRole::kCore) {
        core = i;
        break;
      }
    }
    for (size_t i = 0; i < node.children.size(); ++i) {
      if (i == core) continue;
      for (int h : heads[core]) {
        for (int t : heads[i]) AddLink(h, node.relation, t);
      }
    }
    return heads[core];
  }

 private:
  void AddLink(int from, RhetoricalRelation relation, int to) {
    doc_->sentences[from - 1].links.push_back({relation, to});
  }

  FlatDocument *doc_;
};

std::string OneLine(std::string_view s) {
  std::string out(s);
  for (char &c : out) {
    if (c == '\n' || c == '\r' || c == '\t') c = ' ';
  }
  return out;
}

[[noreturn]] void SchemaError(const std::string &what) {
  throw MalformedInputError("structured input: " + what, 0);
}

json ParseTreeToJson(const ParseTree &tree, NodeId id) {
  json j;
  j["label"] = tree.label(id);
  if (tree.is_leaf(id)) {
    j["token"] = tree.token(id);
  } else {
    json kids = json::array();
    for (NodeId c : tree.children(id)) kids.push_back(ParseTreeToJson(tree, c));
    j["children"] = std::move(kids);
  }
  return j;
}

Node NodeFromJson(const json &j) {
  if (!j.is_object() || !j.contains("label")) SchemaError("tree node");
  if (j.contains("token")) {
    return Node::Leaf(j.at("label").get<std::string>(),
                      j.at("token").get<std::string>());
  }
  Node n = Node::Phrase(j.at("label").get<std::string>(), {});
  for (const json &c : j.at("children")) n.children.push_back(NodeFromJson(c));
  if (n.children.empty()) SchemaError("phrase without children");
  return n;
}

RhetoricalRelation RelationFromJson(const json &j) {
  const auto r = parse_relation(j.get<std::string>());
  if (!r) SchemaError("unknown relation " + j.dump());
  return *r;
}

json Parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error &e) {
    throw MalformedInputError(std::string("structured input: ") + e.what(),
                              e.byte);
  }
}

template <typename Fn>
auto Guard(Fn &&fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const json::exception &e) {
    SchemaError(e.what());
  }
}

void CheckVersion(const json &j) {
  if (j.contains("version") && j.at("version") != kStructuredVersion) {
    SchemaError("unsupported version " + j.at("version").dump());
  }
}

}  // namespace

FlatDocument flatten(const DiscourseTree &root, std::string source) {
  FlatDocument doc;
  doc.source = std::move(source);
  if (root.is_leaf() && !root.error.empty()) doc.error = root.error;
  if (root.is_leaf() && root.tree.empty() && root.text.empty()) return doc;
  Flattener(&doc).Visit(root, 0);
  return doc;
}

FlatDocument flatten(const DocumentResult &result) {
  return flatten(result.tree, result.source);
}

std::string render_flat(const FlatDocument &doc) {
  std::string out;
  for (const SimplifiedSentence &s : doc.sentences) {
    out += "#" + std::to_string(s.id) + "\t" + std::to_string(s.context_layer) +
           "\t" + OneLine(s.text) + "\n";
    for (const Link &l : s.links) {
      out += "\tL:" + relation_tag(l.relation) + "\t#" +
             std::to_string(l.target) + "\n";
    }
  }
  if (!doc.error.empty()) out += "\tERROR\t" + OneLine(doc.error) + "\n";
  return out;
}

std::string render_flat(const std::vector<FlatDocument> &docs) {
  std::string out;
  for (size_t i = 0; i < docs.size(); ++i) {
    if (i > 0) out += "\n";
    out += render_flat(docs[i]);
  }
  return out;
}

json tree_to_json(const DiscourseTree &tree) {
  json j;
  j["kind"] = discourse_kind_id(tree.kind);
  if (tree.is_leaf()) {
    j["text"] = tree.text;
    j["tree"] = tree.tree.empty() ? json(nullptr)
                                  : ParseTreeToJson(tree.tree, tree.tree.root());
    if (!tree.error.empty()) j["error"] = tree.error;
    return j;
  }
  j["relation"] = relation_tag(tree.relation);
  j["rule"] = tree.rule;
  json kids = json::array();
  for (const DiscourseEdge &e : tree.children) {
    kids.push_back({{"role", edge_role_id(e.role)},
                    {"node", tree_to_json(e.child)}});
  }
  j["children"] = std::move(kids);
  return j;
}

DiscourseTree tree_from_json(const json &j) {
  return Guard([&] {
    DiscourseTree t;
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "leaf") {
      t.kind = DiscourseKind::kLeaf;
      t.text = j.at("text").get<std::string>();
      if (!j.at("tree").is_null()) t.tree = ParseTree(NodeFromJson(j.at("tree")));
      if (j.contains("error")) t.error = j.at("error").get<std::string>();
      return t;
    }
    if (kind == "coordination") {
      t.kind = DiscourseKind::kCoordination;
    } else if (kind == "subordination") {
      t.kind = DiscourseKind::kSubordination;
    } else {
      SchemaError("unknown node kind '" + kind + "'");
    }
    t.relation = RelationFromJson(j.at("relation"));
    t.rule = j.value("rule", "");
    for (const json &c : j.at("children")) {
      const auto role = parse_edge_role(c.at("role").get<std::string>());
      if (!role) SchemaError("unknown edge role");
      t.children.push_back({*role, tree_from_json(c.at("node"))});
    }
    return t;
  });
}

json document_to_json(const FlatDocument &doc) {
  json j;
  j["version"] = kStructuredVersion;
  j["source"] = doc.source;
  if (!doc.error.empty()) j["error"] = doc.error;
  json sentences = json::array();
  for (const SimplifiedSentence &s : doc.sentences) {
    json links = json::array();
    for (const Link &l : s.links) {
      links.push_back({{"relation", relation_tag(l.relation)},
                       {"target", l.target}});
    }
    sentences.push_back({{"id", s.id},
                         {"layer", s.context_layer},
                         {"text", s.text},
                         {"tokens", s.tokens},
                         {"links", std::move(links)}});
  }
  j["sentences"] = std::move(sentences);
  return j;
}

FlatDocument document_from_json(const json &j) {
  return Guard([&] {
    CheckVersion(j);
    FlatDocument doc;
    doc.source = j.at("source").get<std::string>();
    if (j.contains("error")) doc.error = j.at("error").get<std::string>();
    for (const json &s : j.at("sentences")) {
      SimplifiedSentence out;
      out.id = s.at("id").get<int>();
      out.context_layer = s.at("layer").get<int>();
      out.text = s.at("text").get<std::string>();
      out.tokens = s.at("tokens").get<std::vector<std::string>>();
      for (const json &l : s.at("links")) {
        out.links.push_back(
            {RelationFromJson(l.at("relation")), l.at("target").get<int>()});
      }
      doc.sentences.push_back(std::move(out));
    }
    return doc;
  });
}

std::string render_structured(const DiscourseTree &tree) {
  json j = {{"version", kStructuredVersion}, {"tree", tree_to_json(tree)}};
  return j.dump();
}

std::string render_structured(const FlatDocument &doc) {
  return document_to_json(doc).dump();
}

DiscourseTree parse_structured_tree(std::string_view text) {
  const json j = Parse(text);
  return Guard([&] {
    CheckVersion(j);
    return tree_from_json(j.contains("tree") ? j.at("tree") : j);
  });
}

FlatDocument parse_structured_document(std::string_view text) {
  return document_from_json(Parse(text));
}

std::string render_structured(const std::vector<DocumentResult> &results) {
  std::string out;
  for (const DocumentResult &r : results) {
    json j = document_to_json(flatten(r));
    j["tree"] = tree_to_json(r.tree);
    out += j.dump() + "\n";
  }
  return out;
}

}  // namespace dissim
