// enqode: pipeline programs
// Copyright 2026 The enqode Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace enqode {

enum class StepKind { Load, Convert, Apply, Extract };
std::string to_string(StepKind k);

/// Encoding state as seen by the type checker: a family name with integer
/// parameters. `heralded` marks states obtained by post-selection, which have
/// no unitary preparation.
struct EncodingType {
  std::string family;
  std::map<std::string, int> params;
  bool heralded = false;

  int param(const std::string& key) const;
  bool operator==(const EncodingType&) const = default;
};

/// e.g. "bidirectional{n=3,s=2}"; heralded states get a trailing " (post-selected)".
std::string to_string(const EncodingType& t);

/// Operand of a load source, a function reference or a parameter value.
struct Value {
  enum class Kind { Array, Word };
  Kind kind = Kind::Word;
  std::vector<double> numbers;
  /// Word text: a number, a name or a path.
  std::string text;

  static Value array(std::vector<double> v);
  static Value word(std::string w);
  std::string print() const;
  bool operator==(const Value&) const = default;
};

struct Step {
  StepKind kind = StepKind::Load;
  /// Encoding for load, otherwise the converter, oracle or method name.
  std::string name;
  /// Load source or function reference.
  std::optional<Value> operand;
  std::vector<std::pair<std::string, Value>> params;
  int line = 0;
  int column = 0;

  const Value* find_param(const std::string& key) const;
  /// Structural equality ignores source positions.
  bool same_as(const Step& o) const;
};

struct PipelineSpec {
  std::string name = "pipeline";
  std::vector<Step> steps;

  bool same_as(const PipelineSpec& o) const;
};

struct TypeError {
  int step = 0;
  std::string expected;
  std::string found;
  std::string message;
};

/**
 * Line-oriented program text. Steps are separated by newlines or ';' and '#'
 * starts a comment:
 *
 *   pipeline <name>
 *   load <encoding> <source> [key=value ...]
 *   convert <converter> [key=value ...]
 *   apply <oracle> <function-ref> [key=value ...]
 *   extract <method> [key=value ...]
 *
 * Sources and function references are inline arrays, numbers, names or file
 * paths. Throws ParseError with line and column.
 */
PipelineSpec parse_pipeline(const std::string& text);

/// Canonical text; parse_pipeline(print_pipeline(s)) is structurally s.
std::string print_pipeline(const PipelineSpec& spec);

}  // namespace enqode
