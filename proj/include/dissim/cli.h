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

// Batch front end: read sentences, simplify, write flat or structured output
// and optional corpus statistics.

#ifndef DISSIM_CLI_H_
#define DISSIM_CLI_H_

#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "dissim/tree.h"

namespace dissim {

enum class InputKind { kPtbTrees, kRawText };
enum class OutputFormat { kFlat, kStructured };

struct RunConfig {
  std::string input_path;   // "-" or empty reads standard input
  InputKind input_kind = InputKind::kPtbTrees;
  OutputFormat output_format = OutputFormat::kFlat;
  bool metrics_enabled = false;
  std::optional<std::string> rules_path;
  std::optional<std::string> lexicon_path;
  std::optional<std::string> parser_command;
  int parser_timeout_ms = 10000;
  int jobs = 1;
  std::string output_path;   // empty writes to the output stream
  std::string metrics_path;  // empty: <output>.metrics.json, else stderr
};

std::optional<InputKind> parse_input_kind(std::string_view text);
std::optional<OutputFormat> parse_output_format(std::string_view text);

// Reads a JSON object whose keys mirror the command-line flags ("input",
// "input-kind", "format", "metrics", "rules", "lexicon", "parser-cmd",
// "parser-timeout-ms", "jobs", "output", "metrics-output") into config.
// Throws ConfigError.
void apply_config_file(const std::string &path, RunConfig *config);

// Throws ConfigError for inconsistent settings (raw text without a parser
// command, jobs < 1, timeout < 1).
void validate_config(const RunConfig &config);

// Runs the external parser on one sentence: the command is executed through
// /bin/sh, receives the sentence and a newline on standard input and must
// print one bracketed tree on standard output. Throws ExternalParserError on
// a non-zero exit, a timeout or output that is not a tree.
ParseTree parse_external(std::string_view sentence, const std::string &command,
                         int timeout_ms = 10000);

// Whole pipeline. Returns the process exit status: 0 on success (even when
// single sentences failed), 2 on configuration or load errors. Primary output
// goes to out unless config.output_path is set; diagnostics go to err.
int run(const RunConfig &config, std::ostream &out, std::ostream &err);

}  // namespace dissim

#endif  // DISSIM_CLI_H_
