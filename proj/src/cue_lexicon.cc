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

#include "dissim/cue_lexicon.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

#include "dissim/assets.h"
#include "dissim/errors.h"
#include "text_util.h"

namespace dissim {

std::vector<CueEntry> load_lexicon(std::string_view document) {
  std::vector<CueEntry> entries;
  std::set<std::pair<std::vector<std::string>, int>> seen;
  int line_no = 0;
  for (const std::string &raw : SplitLines(document)) {
    ++line_no;
    const std::string line = Trim(raw);
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields = SplitOn(raw, '\t');
    if (fields.size() != 4) {
      throw LexiconFormatError("lexicon line " + std::to_string(line_no) +
                               ": expected 4 tab-separated fields");
    }
    CueEntry entry;
    entry.phrase = SplitWords(ToLower(fields[0]));
    if (entry.phrase.empty()) {
      throw LexiconFormatError("lexicon line " + std::to_string(line_no) +
                               ": empty phrase");
    }
    const std::string env = Trim(fields[1]);
    if (env != "*") {
      entry.environment = parse_family(env);
      if (!entry.environment) {
        throw LexiconFormatError("lexicon line " + std::to_string(line_no) +
                                 ": unknown environment '" + env + "'");
      }
    }
    const auto relation = parse_relation(Trim(fields[2]));
    if (!relation) {
      throw LexiconFormatError("lexicon line " + std::to_string(line_no) +
                               ": unknown relation '" + Trim(fields[2]) + "'");
    }
    entry.relation = *relation;
    const std::string priority = Trim(fields[3]);
    auto [end, ec] = std::from_chars(priority.data(),
                                     priority.data() + priority.size(),
                                     entry.priority);
    if (ec != std::errc() || end != priority.data() + priority.size()) {
      throw LexiconFormatError("lexicon line " + std::to_string(line_no) +
                               ": bad priority '" + priority + "'");
    }
    const int env_key =
        entry.environment ? static_cast<int>(*entry.environment) : -1;
    if (!seen.emplace(entry.phrase, env_key).second) {
      throw LexiconConflictError("lexicon line " + std::to_string(line_no) +
                                 ": duplicate phrase '" + Trim(fields[0]) +
                                 "' in environment '" + env + "'");
    }
    entries.push_back(std::move(entry));
  }
  return entries;
}

bool is_temporal_token(std::string_view token) {
  static const std::set<std::string> kWords = {
      "monday",   "tuesday",   "wednesday", "thursday", "friday",
      "saturday", "sunday",    "january",   "february", "march",
      "april",    "may",       "june",      "july",     "august",
      "september", "october",  "november",  "december", "yesterday",
      "today",    "tomorrow",  "tonight",   "morning",  "afternoon",
      "evening",  "night",     "week",      "weekend",  "month",
      "year",     "decade",    "century",   "spring",   "summer",
      "autumn",   "winter",    "weeks",     "months",   "years",
      "decades",  "centuries",
  };
  const std::string lower = ToLower(token);
  if (kWords.count(lower)) return true;
  // Four-digit years 1000-2099, optionally as a decade ("1990s").
  std::string_view digits = lower;
  if (digits.size() == 5 && digits.back() == 's') digits.remove_suffix(1);
  if (digits.size() != 4) return false;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return digits[0] == '1' || (digits[0] == '2' && digits[1] == '0');
}

RhetoricalRelation family_default(Family family,
                                  std::span<const std::string> cue_words) {
  switch (family) {
    case Family::kCoordinateClauses:
    case Family::kCoordinateVerbPhrases:
    case Family::kCoordinateNounPhrases:
      return RhetoricalRelation::kList;
    case Family::kAppositionsNonRestrictive:
    case Family::kAppositionsRestrictive:
    case Family::kRelativeClausesNonDefining:
    case Family::kRelativeClausesDefining:
      return RhetoricalRelation::kElaboration;
    case Family::kReportedSpeech:
      return RhetoricalRelation::kAttribution;
    case Family::kPrepositionalPhrases:
      for (const std::string &w : cue_words) {
        if (is_temporal_token(w)) return RhetoricalRelation::kTemporal;
      }
      return RhetoricalRelation::kElaboration;
    case Family::kAdverbialClauses:
    case Family::kAdjectivalAdverbialPhrases:
    case Family::kLeadNounPhrases:
      return RhetoricalRelation::kUnknown;
  }
  return RhetoricalRelation::kUnknown;
}

CueLexicon::CueLexicon(std::vector<CueEntry> entries)
    : entries_(std::move(entries)) {
  std::set<std::pair<std::vector<std::string>, int>> seen;
  for (const CueEntry &e : entries_) {
    const int env_key = e.environment ? static_cast<int>(*e.environment) : -1;
    if (!seen.emplace(e.phrase, env_key).second) {
      throw LexiconConflictError("duplicate cue phrase in one environment");
    }
  }
}

const CueLexicon &CueLexicon::Default() {
  static const CueLexicon *lexicon =
      new CueLexicon(load_lexicon(default_lexicon_document()));
  return *lexicon;
}

CueClassification CueLexicon::classify(std::span<const std::string> cue_words,
                                       Family family) const {
  std::vector<std::string> cue;
  cue.reserve(cue_words.size());
  for (const std::string &w : cue_words) cue.push_back(ToLower(w));

  const CueEntry *best = nullptr;
  auto better = [&](const CueEntry &a, const CueEntry &b) {
    if (a.phrase.size() != b.phrase.size()) {
      return a.phrase.size() > b.phrase.size();
    }
    if (a.environment.has_value() != b.environment.has_value()) {
      return a.environment.has_value();
    }
    return a.priority > b.priority;
  };
  for (const CueEntry &e : entries_) {
    if (e.environment && *e.environment != family) continue;
    if (e.phrase.size() > cue.size()) continue;
    if (!std::equal(e.phrase.begin(), e.phrase.end(), cue.begin())) continue;
    if (best == nullptr || better(e, *best)) best = &e;
  }
  if (best != nullptr) return {best->relation, CueSource::kLexicon};

  const RhetoricalRelation fallback = family_default(family, cue);
  if (family == Family::kPrepositionalPhrases &&
      fallback == RhetoricalRelation::kTemporal) {
    return {fallback, CueSource::kTemporal};
  }
  return {fallback, CueSource::kDefault};
}

}  // namespace dissim
