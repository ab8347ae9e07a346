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

#include "dissim/types.h"

#include <cctype>

namespace dissim {

namespace {

std::string Lower(std::string_view s) {
  std::string out(s);
  for (char &c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace

std::string relation_name(RhetoricalRelation relation) {
  switch (relation) {
    case RhetoricalRelation::kContrast: return "Contrast";
    case RhetoricalRelation::kCondition: return "Condition";
    case RhetoricalRelation::kTemporal: return "Temporal";
    case RhetoricalRelation::kList: return "List";
    case RhetoricalRelation::kElaboration: return "Elaboration";
    case RhetoricalRelation::kAttribution: return "Attribution";
    case RhetoricalRelation::kCause: return "Cause";
    case RhetoricalRelation::kPurpose: return "Purpose";
    case RhetoricalRelation::kConcession: return "Concession";
    case RhetoricalRelation::kResult: return "Result";
    case RhetoricalRelation::kBackground: return "Background";
    case RhetoricalRelation::kUnknown: return "Unknown";
  }
  return "Unknown";
}

std::string relation_tag(RhetoricalRelation relation) {
  std::string out = relation_name(relation);
  for (char &c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

std::optional<RhetoricalRelation> parse_relation(std::string_view text) {
  const std::string wanted = Lower(text);
  for (RhetoricalRelation r : kAllRelations) {
    if (Lower(relation_name(r)) == wanted) return r;
  }
  return std::nullopt;
}

std::string family_id(Family family) {
  switch (family) {
    case Family::kCoordinateClauses: return "coordinate-clauses";
    case Family::kAdverbialClauses: return "adverbial-clauses";
    case Family::kRelativeClausesNonDefining: return "relative-clauses-nondefining";
    case Family::kRelativeClausesDefining: return "relative-clauses-defining";
    case Family::kReportedSpeech: return "reported-speech";
    case Family::kCoordinateVerbPhrases: return "coordinate-vps";
    case Family::kCoordinateNounPhrases: return "coordinate-nps";
    case Family::kAppositionsNonRestrictive: return "appositions-nonrestrictive";
    case Family::kAppositionsRestrictive: return "appositions-restrictive";
    case Family::kPrepositionalPhrases: return "prepositional-phrases";
    case Family::kAdjectivalAdverbialPhrases: return "adjectival-adverbial-phrases";
    case Family::kLeadNounPhrases: return "lead-nps";
  }
  return "";
}

std::optional<Family> parse_family(std::string_view id) {
  for (Family f : kAllFamilies) {
    if (family_id(f) == id) return f;
  }
  return std::nullopt;
}

int expected_rule_count(Family family) {
  switch (family) {
    case Family::kCoordinateClauses: return 1;
    case Family::kAdverbialClauses: return 6;
    case Family::kRelativeClausesNonDefining: return 8;
    case Family::kRelativeClausesDefining: return 5;
    case Family::kReportedSpeech: return 4;
    case Family::kCoordinateVerbPhrases: return 1;
    case Family::kCoordinateNounPhrases: return 2;
    case Family::kAppositionsNonRestrictive: return 1;
    case Family::kAppositionsRestrictive: return 1;
    case Family::kPrepositionalPhrases: return 3;
    case Family::kAdjectivalAdverbialPhrases: return 2;
    case Family::kLeadNounPhrases: return 1;
  }
  return 0;
}

std::string constituency_id(Constituency c) {
  return c == Constituency::kCoreCore ? "core-core" : "core-context";
}

std::optional<Constituency> parse_constituency(std::string_view id) {
  if (id == "core-core") return Constituency::kCoreCore;
  if (id == "core-context") return Constituency::kCoreContext;
  return std::nullopt;
}

std::string edge_role_id(EdgeRole role) {
  return role == EdgeRole::kCore ? "core" : "context";
}

std::optional<EdgeRole> parse_edge_role(std::string_view id) {
  if (id == "core") return EdgeRole::kCore;
  if (id == "context") return EdgeRole::kContext;
  return std::nullopt;
}

}  // namespace dissim
