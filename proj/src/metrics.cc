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

#include "dissim/metrics.h"

#include <algorithm>
#include <cstdio>

#include "dissim/errors.h"
#include "text_util.h"

namespace dissim {

int word_levenshtein(std::span<const std::string> a,
                     std::span<const std::string> b) {
  if (a.size() < b.size()) std::swap(a, b);
  std::vector<int> row(b.size() + 1);
  for (size_t j = 0; j <= b.size(); ++j) row[j] = static_cast<int>(j);
  for (size_t i = 1; i <= a.size(); ++i) {
    int diag = row[0];
    row[0] = static_cast<int>(i);
    for (size_t j = 1; j <= b.size(); ++j) {
      const int up = row[j];
      row[j] = std::min({row[j] + 1, row[j - 1] + 1,
                         diag + (a[i - 1] == b[j - 1] ? 0 : 1)});
      diag = up;
    }
  }
  return row[b.size()];
}

namespace {

bool SameIgnoringCase(const std::vector<std::string> &a,
                      const std::vector<std::string> &b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (ToLower(a[i]) != ToLower(b[i])) return false;
  }
  return true;
}

double Ratio(long num, long den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace

CorpusStats compute_stats(std::span<const StatsPair> pairs) {
  if (pairs.empty()) throw EmptyCorpusError();
  CorpusStats s;
  for (const StatsPair &p : pairs) {
    ++s.inputs;
    std::vector<std::string> joined;
    for (const SimplifiedSentence &out : p.output.sentences) {
      ++s.output_sentences;
      s.output_tokens += static_cast<long>(out.tokens.size());
      joined.insert(joined.end(), out.tokens.begin(), out.tokens.end());
    }
    if (p.output.sentences.size() == 1 &&
        SameIgnoringCase(p.output.sentences[0].tokens, p.input_tokens)) {
      ++s.same;
    }
    s.levenshtein_total += word_levenshtein(p.input_tokens, joined);
  }
  s.tokens_per_sentence = Ratio(s.output_tokens, s.output_sentences);
  s.sentences_per_complex = Ratio(s.output_sentences, s.inputs);
  s.percent_same = 100.0 * Ratio(s.same, s.inputs);
  s.levenshtein_sc = Ratio(s.levenshtein_total, s.inputs);
  return s;
}

nlohmann::json stats_to_json(const CorpusStats &stats) {
  return {{"version", kStructuredVersion},
          {"tokens_per_sentence", stats.tokens_per_sentence},
          {"sentences_per_complex", stats.sentences_per_complex},
          {"percent_same", stats.percent_same},
          {"levenshtein_sc", stats.levenshtein_sc},
          {"counts",
           {{"inputs", stats.inputs},
            {"output_sentences", stats.output_sentences},
            {"output_tokens", stats.output_tokens},
            {"same", stats.same},
            {"levenshtein_total", stats.levenshtein_total}}}};
}

std::string render_stats_table(const CorpusStats &stats) {
  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "inputs  #T/S    #S/C    %%SAME   LD_SC\n"
                "%-7ld %-7.2f %-7.2f %-7.2f %-7.2f\n",
                stats.inputs, stats.tokens_per_sentence,
                stats.sentences_per_complex, stats.percent_same,
                stats.levenshtein_sc);
  return buf;
}

}  // namespace dissim
