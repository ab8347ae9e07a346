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

// Flat numbered/layered/linked rendering of discourse trees, and a JSON
// serialization of both trees and flat documents.
//
// Flat format, one record per sentence:
//
//   #2<TAB>0<TAB>It was the home of Josiah Henson.
//   <TAB>L:ELABORATION<TAB>#3
//   <TAB>L:LIST<TAB>#1
//
// Structured format: JSON, see docs in README.md. Every object carries
// "version": 1 at the top level.

#ifndef DISSIM_OUTPUT_H_
#define DISSIM_OUTPUT_H_

#include <string>
#include <string_view>
#include <vector>

#include "dissim/engine.h"
#include "dissim/types.h"
#include "json.hpp"

namespace dissim {

inline constexpr int kStructuredVersion = 1;

struct Link {
  RhetoricalRelation relation = RhetoricalRelation::kUnknown;
  int target = 0;

  bool operator==(const Link &other) const = default;
};

struct SimplifiedSentence {
  int id = 0;
  int context_layer = 0;
  std::string text;
  std::vector<std::string> tokens;  // surface leaves, punctuation included
  std::vector<Link> links;

  bool operator==(const SimplifiedSentence &other) const = default;
};

struct FlatDocument {
  std::string source;
  std::string error;  // set for annotated pass-through failures
  std::vector<SimplifiedSentence> sentences;

  bool operator==(const FlatDocument &other) const = default;
};

// Numbers leaves left to right. A leaf's layer counts the context edges above
// it. Every head of a Subordination's core branch links to every head of each
// context branch; Coordination members link to each other symmetrically.
// The heads of a branch are the leaves it exposes to links from outside: a
// leaf is its own head, a Subordination exposes its core branch's heads, a
// Coordination the heads of all members. Links of inner nodes come first.
FlatDocument flatten(const DiscourseTree &root, std::string source = "");

std::string render_flat(const FlatDocument &doc);
// Documents separated by one empty line.
std::string render_flat(const std::vector<FlatDocument> &docs);

nlohmann::json tree_to_json(const DiscourseTree &tree);
DiscourseTree tree_from_json(const nlohmann::json &j);
nlohmann::json document_to_json(const FlatDocument &doc);
FlatDocument document_from_json(const nlohmann::json &j);

std::string render_structured(const DiscourseTree &tree);
std::string render_structured(const FlatDocument &doc);
// Throws MalformedInputError on bad JSON or a schema mismatch.
DiscourseTree parse_structured_tree(std::string_view text);
FlatDocument parse_structured_document(std::string_view text);

// One JSON object per line: {"version":1,"source":...,"sentences":[...],
// "tree":{...}}.
std::string render_structured(const std::vector<DocumentResult> &results);

FlatDocument flatten(const DocumentResult &result);

}  // namespace dissim

#endif  // DISSIM_OUTPUT_H_
