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

#include "dissim/cli.h"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <chrono>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <sstream>

#include "dissim/cue_lexicon.h"
#include "dissim/engine.h"
#include "dissim/errors.h"
#include "dissim/metrics.h"
#include "dissim/output.h"
#include "dissim/rules.h"
#include "json.hpp"
#include "text_util.h"

namespace dissim {

std::optional<InputKind> parse_input_kind(std::string_view text) {
  if (text == "ptb-trees" || text == "ptb") return InputKind::kPtbTrees;
  if (text == "raw-text" || text == "raw") return InputKind::kRawText;
  return std::nullopt;
}

std::optional<OutputFormat> parse_output_format(std::string_view text) {
  if (text == "flat") return OutputFormat::kFlat;
  if (text == "structured" || text == "json") return OutputFormat::kStructured;
  return std::nullopt;
}

namespace {

std::string ReadFile(const std::string &path, const char *what) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(std::string("cannot read ") + what + " '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void CloseFd(int &fd) {
  if (fd >= 0) close(fd);
  fd = -1;
}

}  // namespace

void apply_config_file(const std::string &path, RunConfig *config) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(ReadFile(path, "config file"));
  } catch (const nlohmann::json::exception &e) {
    throw ConfigError("config file '" + path + "': " + e.what());
  }
  if (!j.is_object()) throw ConfigError("config file must hold a JSON object");
  try {
    for (const auto &[key, value] : j.items()) {
      if (key == "input") {
        config->input_path = value.get<std::string>();
      } else if (key == "input-kind") {
        const auto kind = parse_input_kind(value.get<std::string>());
        if (!kind) throw ConfigError("bad input-kind " + value.dump());
        config->input_kind = *kind;
      } else if (key == "format") {
        const auto format = parse_output_format(value.get<std::string>());
        if (!format) throw ConfigError("bad format " + value.dump());
        config->output_format = *format;
      } else if (key == "metrics") {
        config->metrics_enabled = value.get<bool>();
      } else if (key == "rules") {
        config->rules_path = value.get<std::string>();
      } else if (key == "lexicon") {
        config->lexicon_path = value.get<std::string>();
      } else if (key == "parser-cmd") {
        config->parser_command = value.get<std::string>();
      } else if (key == "parser-timeout-ms") {
        config->parser_timeout_ms = value.get<int>();
      } else if (key == "jobs") {
        config->jobs = value.get<int>();
      } else if (key == "output") {
        config->output_path = value.get<std::string>();
      } else if (key == "metrics-output") {
        config->metrics_path = value.get<std::string>();
      } else {
        throw ConfigError("unknown config key '" + key + "'");
      }
    }
  } catch (const nlohmann::json::exception &e) {
    throw ConfigError("config file '" + path + "': " + e.what());
  }
}

void validate_config(const RunConfig &config) {
  if (config.input_kind == InputKind::kRawText &&
      (!config.parser_command || Trim(*config.parser_command).empty())) {
    throw ConfigError("raw-text input requires a parser command (--parser-cmd)");
  }
  if (config.jobs < 1) throw ConfigError("--jobs must be at least 1");
  if (config.parser_timeout_ms < 1) {
    throw ConfigError("parser timeout must be positive");
  }
}

ParseTree parse_external(std::string_view sentence, const std::string &command,
                         int timeout_ms) {
  static const bool kIgnorePipe = [] {
    signal(SIGPIPE, SIG_IGN);
    return true;
  }();
  (void)kIgnorePipe;

  int in_pipe[2];
  int out_pipe[2];
  if (pipe(in_pipe) != 0) throw ExternalParserError("pipe failed");
  if (pipe(out_pipe) != 0) {
    close(in_pipe[0]);
    close(in_pipe[1]);
    throw ExternalParserError("pipe failed");
  }
  fcntl(in_pipe[1], F_SETFD, FD_CLOEXEC);
  fcntl(out_pipe[0], F_SETFD, FD_CLOEXEC);

  const char *argv[] = {"/bin/sh", "-c", command.c_str(), nullptr};
  const pid_t pid = fork();
  if (pid < 0) {
    for (int fd : {in_pipe[0], in_pipe[1], out_pipe[0], out_pipe[1]}) close(fd);
    throw ExternalParserError("fork failed");
  }
  if (pid == 0) {
    setpgid(0, 0);
    dup2(in_pipe[0], STDIN_FILENO);
    dup2(out_pipe[1], STDOUT_FILENO);
    close(in_pipe[0]);
    close(out_pipe[1]);
    execv("/bin/sh", const_cast<char *const *>(argv));
    _exit(127);
  }
  int child_in = in_pipe[1];
  int child_out = out_pipe[0];
  close(in_pipe[0]);
  close(out_pipe[1]);

  std::string payload(sentence);
  payload.push_back('\n');
  size_t written = 0;
  while (written < payload.size()) {
    const ssize_t n =
        write(child_in, payload.data() + written, payload.size() - written);
    if (n < 0) {
      if (errno == EINTR) continue;
      break;  // the parser stopped reading; its status decides
    }
    written += static_cast<size_t>(n);
  }
  CloseFd(child_in);

  const auto deadline =
      std::chrono::steady_clock::now() + std::chrono::milliseconds(timeout_ms);
  std::string output;
  bool timed_out = false;
  char buf[4096];
  while (true) {
    const auto left = std::chrono::duration_cast<std::chrono::milliseconds>(
                          deadline - std::chrono::steady_clock::now())
                          .count();
    if (left <= 0) {
      timed_out = true;
      break;
    }
    pollfd pfd{child_out, POLLIN, 0};
    const int ready = poll(&pfd, 1, static_cast<int>(left));
    if (ready < 0) {
      if (errno == EINTR) continue;
      break;
    }
    if (ready == 0) {
      timed_out = true;
      break;
    }
    const ssize_t n = read(child_out, buf, sizeof(buf));
    if (n < 0) {
      if (errno == EINTR) continue;
      break;
    }
    if (n == 0) break;
    output.append(buf, static_cast<size_t>(n));
  }
  CloseFd(child_out);
  if (timed_out) {
    kill(-pid, SIGKILL);
    kill(pid, SIGKILL);
  }
  int status = 0;
  while (waitpid(pid, &status, 0) < 0 && errno == EINTR) {
  }
  if (timed_out) {
    throw ExternalParserError("parser timed out after " +
                              std::to_string(timeout_ms) + " ms");
  }
  if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) {
    throw ExternalParserError(
        "parser exited with status " +
        std::to_string(WIFEXITED(status) ? WEXITSTATUS(status)
                                         : 128 + WTERMSIG(status)));
  }
  try {
    return parse_ptb(output);
  } catch (const Error &e) {
    throw ExternalParserError(std::string("parser output is not a tree: ") +
                              e.what());
  }
}

int run(const RunConfig &config, std::ostream &out, std::ostream &err) {
  std::vector<TransformationRule> custom_rules;
  const std::vector<TransformationRule> *rules = nullptr;
  std::optional<CueLexicon> custom_lexicon;
  std::string input;
  try {
    validate_config(config);
    std::optional<std::string> rules_path = config.rules_path;
    if (!rules_path) {
      if (const char *env = std::getenv("DISSIM_RULES"); env && *env) {
        rules_path = env;
      }
    }
    if (rules_path) {
      custom_rules = load_rules(ReadFile(*rules_path, "rules file"));
      rules = &custom_rules;
    } else {
      rules = &default_rules();
    }
    if (config.lexicon_path) {
      custom_lexicon.emplace(
          load_lexicon(ReadFile(*config.lexicon_path, "lexicon file")));
    }
    if (config.input_path.empty() || config.input_path == "-") {
      std::ostringstream ss;
      ss << std::cin.rdbuf();
      input = ss.str();
    } else {
      input = ReadFile(config.input_path, "input");
    }
  } catch (const Error &e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  const CueLexicon &lexicon =
      custom_lexicon ? *custom_lexicon : CueLexicon::Default();

  std::vector<std::string> records;
  if (config.input_kind == InputKind::kPtbTrees) {
    records = split_ptb_records(input);
  } else {
    for (const std::string &line : SplitLines(input)) {
      if (!Trim(line).empty()) records.push_back(Trim(line));
    }
  }

  std::vector<DocumentResult> results;
  try {
    if (config.input_kind == InputKind::kPtbTrees) {
      results = simplify_corpus(records, *rules, lexicon, config.jobs);
    } else {
      const std::string command = *config.parser_command;
      const int timeout = config.parser_timeout_ms;
      results = simplify_corpus(
          records.size(),
          [&](size_t i) { return parse_external(records[i], command, timeout); },
          [&](size_t i) { return records[i]; }, *rules, lexicon, config.jobs);
    }
  } catch (const Error &e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  std::vector<FlatDocument> docs;
  docs.reserve(results.size());
  for (size_t i = 0; i < results.size(); ++i) {
    docs.push_back(flatten(results[i]));
    for (const std::string &d : results[i].diagnostics) {
      err << "warning: sentence " << i + 1 << ": " << d << "\n";
    }
    if (!results[i].ok()) {
      err << "warning: sentence " << i + 1 << ": " << results[i].tree.error
          << "\n";
    }
  }
  const std::string rendered = config.output_format == OutputFormat::kFlat
                                   ? render_flat(docs)
                                   : render_structured(results);
  if (config.output_path.empty()) {
    out << rendered;
    out.flush();
  } else {
    std::ofstream file(config.output_path, std::ios::binary);
    if (!file) {
      err << "error: cannot write '" << config.output_path << "'\n";
      return 2;
    }
    file << rendered;
  }

  if (config.metrics_enabled) {
    std::vector<StatsPair> pairs;
    for (size_t i = 0; i < results.size(); ++i) {
      StatsPair p;
      p.input_tokens = results[i].ok() ? surface_tokens(results[i].input)
                                       : SplitWords(results[i].source);
      p.output = docs[i];
      pairs.push_back(std::move(p));
    }
    nlohmann::json report;
    try {
      const CorpusStats stats = compute_stats(pairs);
      report = stats_to_json(stats);
      err << render_stats_table(stats);
    } catch (const EmptyCorpusError &e) {
      report = {{"version", kStructuredVersion},
                {"error", e.what()}};
      err << "metrics: empty corpus\n";
    }
    std::string path = config.metrics_path;
    if (path.empty() && !config.output_path.empty()) {
      path = config.output_path + ".metrics.json";
    }
    if (path.empty()) {
      err << report.dump(2) << "\n";
    } else {
      std::ofstream file(path, std::ios::binary);
      if (!file) {
        err << "error: cannot write '" << path << "'\n";
        return 2;
      }
      file << report.dump(2) << "\n";
    }
  }
  return 0;
}

}  // namespace dissim
