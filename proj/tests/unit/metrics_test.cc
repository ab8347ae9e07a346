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

#include <algorithm>
#include <functional>

#include "dissim/engine.h"
#include "dissim/errors.h"
#include "dissim/metrics.h"
#include "dissim/output.h"
#include "generators.h"
#include "test_util.h"

namespace dissim {
namespace {

using Tokens = std::vector<std::string>;

// Plain recursive definition with memoization.
int OracleDistance(const Tokens &a, const Tokens &b) {
  std::vector<std::vector<int>> memo(a.size() + 1, std::vector<int>(b.size() + 1, -1));
  std::function<int(size_t, size_t)> d = [&](size_t i, size_t j) -> int {
    if (i == 0) return static_cast<int>(j);
    if (j == 0) return static_cast<int>(i);
    int &m = memo[i][j];
    if (m >= 0) return m;
    m = std::min({d(i - 1, j) + 1, d(i, j - 1) + 1,
                  d(i - 1, j - 1) + (a[i - 1] == b[j - 1] ? 0 : 1)});
    return m;
  };
  return d(a.size(), b.size());
}

StatsPair PairFor(const ParseTree &t) {
  StatsPair p;
  p.input_tokens = surface_tokens(t);
  p.output = flatten(simplify(t));
  return p;
}

TEST(WordLevenshtein, Examples) {
  EXPECT_EQ(word_levenshtein(Tokens{}, Tokens{}), 0);
  EXPECT_EQ(word_levenshtein(Tokens{"a", "b", "c"}, Tokens{"a", "c"}), 1);
  EXPECT_EQ(word_levenshtein(Tokens{"a"}, Tokens{}), 1);
  EXPECT_EQ(word_levenshtein(Tokens{"x", "y"}, Tokens{"y", "x"}), 2);
  EXPECT_EQ(word_levenshtein(Tokens{"The", "cat"}, Tokens{"the", "cat"}), 1);
}

TEST(WordLevenshtein, MatchesOracle) {
  testing::Rng rng(31);
  for (int i = 0; i < 1000; ++i) {
    const Tokens a = testing::RandomTokens(rng, 12, 5);
    const Tokens b = testing::RandomTokens(rng, 12, 5);
    EXPECT_EQ(word_levenshtein(a, b), OracleDistance(a, b));
  }
}

TEST(WordLevenshtein, MetricAxioms) {
  testing::Rng rng(32);
  for (int i = 0; i < 1000; ++i) {
    const Tokens a = testing::RandomTokens(rng, 8, 3);
    const Tokens b = testing::RandomTokens(rng, 8, 3);
    const Tokens c = testing::RandomTokens(rng, 8, 3);
    const int ab = word_levenshtein(a, b);
    EXPECT_LE(word_levenshtein(a, c), ab + word_levenshtein(b, c));
    EXPECT_EQ(ab, word_levenshtein(b, a));
    EXPECT_EQ(ab == 0, a == b);
    EXPECT_EQ(word_levenshtein(a, a), 0);
  }
}

TEST(ComputeStats, IdentityPair) {
  const StatsPair p =
      PairFor(parse_ptb("(ROOT (S (NP (NN Rain)) (VP (VBD fell)) (. .)))"));
  const CorpusStats s = compute_stats(std::vector<StatsPair>{p});
  EXPECT_DOUBLE_EQ(s.tokens_per_sentence, 3.0);
  EXPECT_DOUBLE_EQ(s.sentences_per_complex, 1.0);
  EXPECT_DOUBLE_EQ(s.percent_same, 100.0);
  EXPECT_DOUBLE_EQ(s.levenshtein_sc, 0.0);
}

TEST(ComputeStats, WorkedExamples) {
  std::vector<StatsPair> pairs;
  for (const std::string name : {"treasury", "henson", "ambassador"}) {
    pairs.push_back(PairFor(parse_ptb(testing::ReadData("golden/" + name + ".ptb"))));
  }
  const CorpusStats s = compute_stats(pairs);
  EXPECT_EQ(s.output_sentences, 15);
  EXPECT_DOUBLE_EQ(s.sentences_per_complex, 5.0);
  EXPECT_DOUBLE_EQ(s.percent_same, 0.0);
}

TEST(ComputeStats, EmptyCorpus) {
  EXPECT_THROW(compute_stats(std::vector<StatsPair>{}), EmptyCorpusError);
}

TEST(ComputeStats, CaseInsensitiveSame) {
  StatsPair p;
  p.input_tokens = {"rain", "fell", "."};
  p.output.sentences.push_back({1, 0, "Rain fell.", {"Rain", "fell", "."}, {}});
  EXPECT_DOUBLE_EQ(compute_stats(std::vector<StatsPair>{p}).percent_same, 100.0);
}

TEST(ComputeStats, Report) {
  const StatsPair p =
      PairFor(parse_ptb("(ROOT (S (NP (NN Rain)) (VP (VBD fell)) (. .)))"));
  const CorpusStats s = compute_stats(std::vector<StatsPair>{p});
  const nlohmann::json j = stats_to_json(s);
  EXPECT_EQ(j["version"], kStructuredVersion);
  EXPECT_DOUBLE_EQ(j["sentences_per_complex"].get<double>(), 1.0);
  EXPECT_EQ(j["counts"]["inputs"], 1);
  EXPECT_NE(render_stats_table(s).find("100.00"), std::string::npos);
}

std::vector<StatsPair> CorpusPairs() {
  std::vector<StatsPair> pairs;
  for (const std::string &r : split_ptb_records(testing::ReadData("corpus.ptb"))) {
    pairs.push_back(PairFor(parse_ptb(r)));
  }
  return pairs;
}

TEST(StatsProperties, NoSameWhenEverythingSplits) {
  testing::Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<StatsPair> pairs;
    const int n = 1 + static_cast<int>(rng() % 5);
    for (int i = 0; i < n; ++i) {
      StatsPair p;
      p.input_tokens = testing::RandomTokens(rng, 6, 3);
      const int k = 2 + static_cast<int>(rng() % 3);
      for (int s = 0; s < k; ++s) {
        p.output.sentences.push_back(
            {s + 1, 0, "", testing::RandomTokens(rng, 6, 3), {}});
      }
      pairs.push_back(p);
    }
    EXPECT_DOUBLE_EQ(compute_stats(pairs).percent_same, 0.0);
  }
}

TEST(StatsProperties, ReorderInvariant) {
  std::vector<StatsPair> pairs = CorpusPairs();
  const CorpusStats base = compute_stats(pairs);
  testing::Rng rng(6);
  for (int i = 0; i < 20; ++i) {
    std::shuffle(pairs.begin(), pairs.end(), rng);
    const CorpusStats s = compute_stats(pairs);
    EXPECT_DOUBLE_EQ(s.tokens_per_sentence, base.tokens_per_sentence);
    EXPECT_DOUBLE_EQ(s.sentences_per_complex, base.sentences_per_complex);
    EXPECT_DOUBLE_EQ(s.percent_same, base.percent_same);
    EXPECT_DOUBLE_EQ(s.levenshtein_sc, base.levenshtein_sc);
  }
}

TEST(StatsProperties, FixtureCorpusSurrogates) {
  const std::vector<StatsPair> pairs = CorpusPairs();
  ASSERT_GE(pairs.size(), 100u);
  const CorpusStats s = compute_stats(pairs);
  EXPECT_GE(s.sentences_per_complex, 2.0);
  EXPECT_LE(s.percent_same, 5.0);
}

}  // namespace
}  // namespace dissim
