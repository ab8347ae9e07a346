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

// dissim: split complex sentences into a discourse tree of simple ones.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "dissim/cli.h"
#include "dissim/errors.h"

int main(int argc, char **argv) {
  CLI::App app{"Split complex sentences into linked simple sentences."};
  std::string config_file;
  std::string input;
  std::string input_kind;
  std::string format;
  bool metrics = false;
  std::string rules;
  std::string lexicon;
  std::string parser_cmd;
  int parser_timeout_ms = 0;
  int jobs = 0;
  std::string output;
  std::string metrics_output;

  app.add_option("--config", config_file, "JSON config file; flags override it")
      ->check(CLI::ExistingFile);
  app.add_option("-i,--input", input, "Input file ('-' for standard input)");
  app.add_option("--input-kind", input_kind, "ptb-trees (default) or raw-text")
      ->check(CLI::IsMember({"ptb-trees", "raw-text"}));
  app.add_option("-f,--format", format, "flat (default) or structured")
      ->check(CLI::IsMember({"flat", "structured"}));
  app.add_flag("--metrics", metrics, "Write corpus statistics");
  app.add_option("--rules", rules, "Rule definition file (else $DISSIM_RULES)");
  app.add_option("--lexicon", lexicon, "Cue lexicon file");
  app.add_option("--parser-cmd", parser_cmd,
                 "Shell command that turns a sentence on stdin into a tree");
  app.add_option("--parser-timeout-ms", parser_timeout_ms,
                 "Per-sentence parser deadline (default 10000)");
  app.add_option("-j,--jobs", jobs, "Worker threads (default 1)");
  app.add_option("-o,--output", output, "Output file (default standard output)");
  app.add_option("--metrics-output", metrics_output,
                 "Statistics file (default <output>.metrics.json or stderr)");
  CLI11_PARSE(app, argc, argv);

  dissim::RunConfig config;
  try {
    if (!config_file.empty()) dissim::apply_config_file(config_file, &config);
  } catch (const dissim::Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  if (app.count("--input")) config.input_path = input;
  if (app.count("--input-kind")) {
    config.input_kind = *dissim::parse_input_kind(input_kind);
  }
  if (app.count("--format")) {
    config.output_format = *dissim::parse_output_format(format);
  }
  if (metrics) config.metrics_enabled = true;
  if (app.count("--rules")) config.rules_path = rules;
  if (app.count("--lexicon")) config.lexicon_path = lexicon;
  if (app.count("--parser-cmd")) config.parser_command = parser_cmd;
  if (app.count("--parser-timeout-ms")) {
    config.parser_timeout_ms = parser_timeout_ms;
  }
  if (app.count("--jobs")) config.jobs = jobs;
  if (app.count("--output")) config.output_path = output;
  if (app.count("--metrics-output")) config.metrics_path = metrics_output;
  return dissim::run(config, std::cout, std::cerr);
}
