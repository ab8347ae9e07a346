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

// Cue phrase -> rhetorical relation lookup.

#ifndef DISSIM_CUE_LEXICON_H_
#define DISSIM_CUE_LEXICON_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dissim/types.h"

namespace dissim {

struct CueEntry {
  std::vector<std::string> phrase;     // lowercase tokens
  std::optional<Family> environment;   // nullopt matches every family
  RhetoricalRelation relation = RhetoricalRelation::kUnknown;
  int priority = 0;                    // higher wins among equal matches

  bool operator==(const CueEntry &other) const = default;
};

// Parses the tab-separated lexicon format:
//   phrase <TAB> environment <TAB> relation <TAB> priority
// where environment is a family id or "*". Lines starting with '#' and blank
// lines are ignored. Throws LexiconFormatError on malformed lines and
// LexiconConflictError when a phrase repeats within one environment.
std::vector<CueEntry> load_lexicon(std::string_view document);

// True for weekday and month names, four-digit years and a few other
// time nouns ("morning", "century", ...).
bool is_temporal_token(std::string_view token);

// Relation used when no lexicon entry matches.
RhetoricalRelation family_default(Family family,
                                  std::span<const std::string> cue_words);

enum class CueSource { kLexicon, kTemporal, kDefault };

struct CueClassification {
  RhetoricalRelation relation = RhetoricalRelation::kUnknown;
  CueSource source = CueSource::kDefault;
};

class CueLexicon {
 public:
  CueLexicon() = default;
  // Throws LexiconConflictError on duplicate phrase+environment pairs.
  explicit CueLexicon(std::vector<CueEntry> entries);

  // The bundled lexicon asset.
  static const CueLexicon &Default();

  const std::vector<CueEntry> &entries() const { return entries_; }

  // The longest entry whose phrase is a prefix of cue_words wins; among equal
  // lengths an entry restricted to family beats an unrestricted one, then
  // the higher priority wins. Falls back to family_default().
  CueClassification classify(std::span<const std::string> cue_words,
                             Family family) const;
  RhetoricalRelation classify_relation(std::span<const std::string> cue_words,
                                       Family family) const {
    return classify(cue_words, family).relation;
  }

 private:
  std::vector<CueEntry> entries_;
};

}  // namespace dissim

#endif  // DISSIM_CUE_LEXICON_H_
