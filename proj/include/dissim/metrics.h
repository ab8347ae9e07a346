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

// Corpus statistics: tokens per output sentence, output sentences per input,
// share of unchanged inputs and word-level edit distance from the input.
// Tokens are PTB leaves, punctuation included.

#ifndef DISSIM_METRICS_H_
#define DISSIM_METRICS_H_

#include <span>
#include <string>
#include <vector>

#include "dissim/output.h"
#include "json.hpp"

namespace dissim {

// Insert/delete/substitute distance over whole tokens.
int word_levenshtein(std::span<const std::string> a,
                     std::span<const std::string> b);

struct StatsPair {
  std::vector<std::string> input_tokens;
  FlatDocument output;
};

struct CorpusStats {
  double tokens_per_sentence = 0;    // #T/S
  double sentences_per_complex = 0;  // #S/C
  double percent_same = 0;           // %SAME
  double levenshtein_sc = 0;         // LD_SC

  long inputs = 0;
  long output_sentences = 0;
  long output_tokens = 0;
  long same = 0;
  long levenshtein_total = 0;

  bool operator==(const CorpusStats &other) const = default;
};

// Throws EmptyCorpusError when pairs is empty. An input counts as unchanged
// when its document has exactly one sentence whose tokens equal the input
// tokens, ignoring case. LD_SC compares the input with the concatenation of
// all output sentences in id order.
CorpusStats compute_stats(std::span<const StatsPair> pairs);

nlohmann::json stats_to_json(const CorpusStats &stats);
std::string render_stats_table(const CorpusStats &stats);

}  // namespace dissim

#endif  // DISSIM_METRICS_H_
