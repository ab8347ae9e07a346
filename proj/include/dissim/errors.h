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

#ifndef DISSIM_ERRORS_H_
#define DISSIM_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dissim {

// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bracketed tree text is not well formed. offset() is the character offset
// at which parsing failed.
class MalformedInputError : public Error {
 public:
  MalformedInputError(const std::string &what, size_t offset)
      : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
  size_t offset() const { return offset_; }

 private:
  size_t offset_;
};

class EmptyInputError : public Error {
 public:
  EmptyInputError() : Error("empty input") {}
};

class EmptySpanError : public Error {
 public:
  EmptySpanError() : Error("cannot realize an empty token span") {}
};

class InvalidNodeError : public Error {
 public:
  explicit InvalidNodeError(int id)
      : Error("invalid node id " + std::to_string(id)) {}
};

class PatternSyntaxError : public Error {
 public:
  PatternSyntaxError(const std::string &what, size_t position)
      : Error("pattern syntax error: " + what + " at position " +
              std::to_string(position)),
        position_(position) {}
  size_t position() const { return position_; }

 private:
  size_t position_;
};

class UnsupportedOperatorError : public Error {
 public:
  explicit UnsupportedOperatorError(const std::string &op)
      : Error("unsupported operator '" + op + "'"), op_(op) {}
  const std::string &op() const { return op_; }

 private:
  std::string op_;
};

// A rule record is inconsistent (unknown family, unresolved capture,
// bad action list, ...).
class RuleDefinitionError : public Error {
 public:
  using Error::Error;
};

// The loaded rule set does not have the expected per-family counts.
class RuleInventoryError : public Error {
 public:
  RuleInventoryError(const std::string &what, const std::string &family)
      : Error(what), family_(family) {}
  const std::string &family() const { return family_; }

 private:
  std::string family_;
};

class DuplicateRuleError : public Error {
 public:
  explicit DuplicateRuleError(const std::string &name)
      : Error("duplicate rule '" + name + "'"), name_(name) {}
  const std::string &name() const { return name_; }

 private:
  std::string name_;
};

class LexiconConflictError : public Error {
 public:
  using Error::Error;
};

class LexiconFormatError : public Error {
 public:
  using Error::Error;
};

class EmptyCorpusError : public Error {
 public:
  EmptyCorpusError() : Error("empty corpus") {}
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class ExternalParserError : public Error {
 public:
  using Error::Error;
};

}  // namespace dissim

#endif  // DISSIM_ERRORS_H_
