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


#include <gtest/gtest.h>

#include <set>

#include "dissim/cue_lexicon.h"
#include "dissim/errors.h"
#include "generators.h"

namespace dissim {
namespace {

using R = RhetoricalRelation;
using W = std::vector<std::string>;

R Classify(const W &words, Family family) {
  return CueLexicon::Default().classify_relation(words, family);
}

TEST(Classify, Examples) {
  EXPECT_EQ(Classify({"although"}, Family::kAdverbialClauses), R::kContrast);
  EXPECT_EQ(Classify({"if"}, Family::kAdverbialClauses), R::kCondition);
  EXPECT_EQ(Classify({"and"}, Family::kCoordinateClauses), R::kList);
  EXPECT_EQ(Classify({}, Family::kAppositionsNonRestrictive), R::kElaboration);
}

TEST(Classify, CaseAndLongestPrefix) {
  EXPECT_EQ(Classify({"Although"}, Family::kAdverbialClauses), R::kContrast);
  EXPECT_EQ(Classify({"even", "though"}, Family::kAdverbialClauses),
            R::kConcession);
  EXPECT_EQ(Classify({"even", "if", "it", "rains"}, Family::kAdverbialClauses),
            R::kConcession);
  EXPECT_EQ(Classify({"so", "that"}, Family::kAdverbialClauses), R::kPurpose);
}

TEST(Classify, EnvironmentSpecificEntryWins) {
  EXPECT_EQ(Classify({"while"}, Family::kAdverbialClauses), R::kTemporal);
  EXPECT_EQ(Classify({"while"}, Family::kCoordinateClauses), R::kContrast);
}

TEST(Classify, Sources) {
  const CueLexicon &lex = CueLexicon::Default();
  EXPECT_EQ(lex.classify(W{"because"}, Family::kAdverbialClauses).source,
            CueSource::kLexicon);
  EXPECT_EQ(lex.classify(W{"xyzzy"}, Family::kAdverbialClauses).source,
            CueSource::kDefault);
  const auto pp = lex.classify(W{"on", "Monday"}, Family::kPrepositionalPhrases);
  EXPECT_EQ(pp.relation, R::kTemporal);
  EXPECT_EQ(pp.source, CueSource::kTemporal);
  EXPECT_EQ(lex.classify(W{"in", "1830"}, Family::kPrepositionalPhrases).relation,
            R::kTemporal);
}

TEST(Classify, EveryFamilyHasDefault) {
  const CueLexicon empty;
  for (Family f : kAllFamilies) {
    const R r = empty.classify_relation(W{}, f);
    EXPECT_TRUE(std::find(kAllRelations.begin(), kAllRelations.end(), r) !=
                kAllRelations.end());
    EXPECT_EQ(r, family_default(f, W{}));
  }
  EXPECT_EQ(family_default(Family::kAdverbialClauses, W{}), R::kUnknown);
  EXPECT_EQ(family_default(Family::kLeadNounPhrases, W{}), R::kUnknown);
  EXPECT_EQ(family_default(Family::kPrepositionalPhrases, W{"in", "Canada"}),
            R::kElaboration);
  EXPECT_EQ(family_default(Family::kCoordinateClauses, W{}), R::kList);
  EXPECT_EQ(family_default(Family::kReportedSpeech, W{}), R::kAttribution);
  EXPECT_EQ(family_default(Family::kRelativeClausesDefining, W{}), R::kElaboration);
}

TEST(Classify, TotalAndDeterministic) {
  testing::Rng rng(4);
  std::vector<std::string> vocab;
  for (const CueEntry &e : CueLexicon::Default().entries()) {
    vocab.insert(vocab.end(), e.phrase.begin(), e.phrase.end());
  }
  vocab.push_back("Monday");
  vocab.push_back("zebra");
  for (int i = 0; i < 2000; ++i) {
    W words(std::uniform_int_distribution<int>(0, 3)(rng));
    for (auto &w : words) w = vocab[rng() % vocab.size()];
    const Family f = kAllFamilies[rng() % kAllFamilies.size()];
    const R a = Classify(words, f);
    EXPECT_EQ(a, Classify(words, f));
    EXPECT_TRUE(std::find(kAllRelations.begin(), kAllRelations.end(), a) !=
                kAllRelations.end());
  }
}

bool Covers(const CueEntry &e, const W &words, Family f) {
  if (e.environment && *e.environment != f) return false;
  if (e.phrase.size() > words.size()) return false;
  for (size_t i = 0; i < e.phrase.size(); ++i) {
    std::string w = words[i];
    for (char &c : w) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (w != e.phrase[i]) return false;
  }
  return true;
}

TEST(Classify, RemovingEntryHasNoCrossTalk) {
  const auto &entries = CueLexicon::Default().entries();
  std::vector<W> cues = {{}, {"on", "Monday"}, {"zebra"}};
  for (const CueEntry &e : entries) {
    cues.push_back(e.phrase);
    W longer = e.phrase;
    longer.push_back("then");
    cues.push_back(longer);
  }
  for (size_t drop = 0; drop < entries.size(); ++drop) {
    std::vector<CueEntry> rest = entries;
    rest.erase(rest.begin() + drop);
    const CueLexicon smaller(rest);
    for (const W &cue : cues) {
      for (Family f : kAllFamilies) {
        if (Covers(entries[drop], cue, f)) continue;
        EXPECT_EQ(smaller.classify_relation(cue, f), Classify(cue, f));
      }
    }
  }
}

TEST(LoadLexicon, DefaultCoversRelations) {
  const auto &entries = CueLexicon::Default().entries();
  EXPECT_GE(entries.size(), 40u);
  std::set<R> seen;
  for (const CueEntry &e : entries) seen.insert(e.relation);
  for (R r : kAllRelations) {
    if (r == R::kUnknown) continue;
    EXPECT_TRUE(seen.count(r)) << relation_name(r);
  }
}

TEST(LoadLexicon, Parsing) {
  const auto entries = load_lexicon(
      "# comment\n\nso that\t*\tPurpose\t0\nwhile\tadverbial-clauses\tTemporal\t2\n");
  ASSERT_EQ(entries.size(), 2u);
  EXPECT_EQ(entries[0].phrase, (W{"so", "that"}));
  EXPECT_FALSE(entries[0].environment.has_value());
  EXPECT_EQ(entries[1].environment, Family::kAdverbialClauses);
  EXPECT_EQ(entries[1].priority, 2);
  EXPECT_TRUE(load_lexicon("").empty());
}

TEST(LoadLexicon, Errors) {
  EXPECT_THROW(load_lexicon("although\t*\tContrast\t0\nalthough\t*\tContrast\t0\n"),
               LexiconConflictError);
  EXPECT_THROW(load_lexicon("although\t*\tContrast\n"), LexiconFormatError);
  EXPECT_THROW(load_lexicon("although\t*\tNonsense\t0\n"), LexiconFormatError);
  EXPECT_THROW(load_lexicon("although\tnowhere\tContrast\t0\n"), LexiconFormatError);
  EXPECT_NO_THROW(load_lexicon(
      "while\t*\tContrast\t0\nwhile\tadverbial-clauses\tTemporal\t0\n"));
}

TEST(TemporalTokens, Examples) {
  EXPECT_TRUE(is_temporal_token("Monday"));
  EXPECT_TRUE(is_temporal_token("1830"));
  EXPECT_TRUE(is_temporal_token("November"));
  EXPECT_FALSE(is_temporal_token("Canada"));
  EXPECT_FALSE(is_temporal_token("12345"));
}

}  // namespace
}  // namespace dissim
