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

// Enumerations shared by the rule set, the cue lexicon and the discourse
// tree, with their external spellings.

#ifndef DISSIM_TYPES_H_
#define DISSIM_TYPES_H_

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace dissim {

enum class RhetoricalRelation {
  kContrast,
  kCondition,
  kTemporal,
  kList,
  kElaboration,
  kAttribution,
  kCause,
  kPurpose,
  kConcession,
  kResult,
  kBackground,
  kUnknown,
};

inline constexpr std::array<RhetoricalRelation, 12> kAllRelations = {
    RhetoricalRelation::kContrast,    RhetoricalRelation::kCondition,
    RhetoricalRelation::kTemporal,    RhetoricalRelation::kList,
    RhetoricalRelation::kElaboration, RhetoricalRelation::kAttribution,
    RhetoricalRelation::kCause,       RhetoricalRelation::kPurpose,
    RhetoricalRelation::kConcession,  RhetoricalRelation::kResult,
    RhetoricalRelation::kBackground,  RhetoricalRelation::kUnknown,
};

// "Contrast", "Condition", ...
std::string relation_name(RhetoricalRelation relation);
// "CONTRAST", "CONDITION", ...
std::string relation_tag(RhetoricalRelation relation);
// Accepts either spelling, case-insensitively.
std::optional<RhetoricalRelation> parse_relation(std::string_view text);

// Construct families of the rule inventory.
enum class Family {
  kCoordinateClauses,
  kAdverbialClauses,
  kRelativeClausesNonDefining,
  kRelativeClausesDefining,
  kReportedSpeech,
  kCoordinateVerbPhrases,
  kCoordinateNounPhrases,
  kAppositionsNonRestrictive,
  kAppositionsRestrictive,
  kPrepositionalPhrases,
  kAdjectivalAdverbialPhrases,
  kLeadNounPhrases,
};

inline constexpr std::array<Family, 12> kAllFamilies = {
    Family::kCoordinateClauses,          Family::kAdverbialClauses,
    Family::kRelativeClausesNonDefining, Family::kRelativeClausesDefining,
    Family::kReportedSpeech,             Family::kCoordinateVerbPhrases,
    Family::kCoordinateNounPhrases,      Family::kAppositionsNonRestrictive,
    Family::kAppositionsRestrictive,     Family::kPrepositionalPhrases,
    Family::kAdjectivalAdverbialPhrases, Family::kLeadNounPhrases,
};

// Identifier used in the rule and lexicon files, e.g. "adverbial-clauses".
std::string family_id(Family family);
std::optional<Family> parse_family(std::string_view id);
// Number of rules the inventory must hold for the family.
int expected_rule_count(Family family);

enum class Constituency { kCoreCore, kCoreContext };
std::string constituency_id(Constituency c);
std::optional<Constituency> parse_constituency(std::string_view id);

enum class EdgeRole { kCore, kContext };
std::string edge_role_id(EdgeRole role);
std::optional<EdgeRole> parse_edge_role(std::string_view id);

}  // namespace dissim

#endif  // DISSIM_TYPES_H_
