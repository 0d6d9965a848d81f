// enqode: pipeline text parser and printer
// Copyright 2026 The enqode Authors.
// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "enqode/errors.hpp"
#include "enqode/pipeline/catalog.hpp"
#include "enqode/pipeline/spec.hpp"

namespace enqode {

std::string to_string(StepKind k) {
  switch (k) {
    case StepKind::Load:
      return "load";
    case StepKind::Convert:
      return "convert";
    case StepKind::Apply:
      return "apply";
    case StepKind::Extract:
      return "extract";
  }
  return "?";
}

int EncodingType::param(const std::string& key) const {
  auto it = params.find(key);
  if (it == params.end()) throw ArgumentError(family + " has no parameter '" + key + "'");
  return it->second;
}

std::string to_string(const EncodingType& t) {
  std::string s = t.family;
  if (!t.params.empty()) {
    s += '{';
    bool first = true;
    for (const auto& [k, v] : t.params) {
      if (!first) s += ',';
      first = false;
      s += k + "=" + std::to_string(v);
    }
    s += '}';
  }
  if (t.heralded) s += " (post-selected)";
  return s;
}

Value Value::array(std::vector<double> v) {
  Value x;
  x.kind = Kind::Array;
  x.numbers = std::move(v);
  return x;
}

Value Value::word(std::string w) {
  Value x;
  x.kind = Kind::Word;
  x.text = std::move(w);
  return x;
}

namespace {

std::string print_number(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

}  // namespace

std::string Value::print() const {
  if (kind == Kind::Word) return text;
  std::string s = "[";
  for (std::size_t i = 0; i < numbers.size(); ++i) {
    if (i) s += ", ";
    s += print_number(numbers[i]);
  }
  return s + "]";
}

const Value* Step::find_param(const std::string& key) const {
  for (const auto& [k, v] : params)
    if (k == key) return &v;
  return nullptr;
}

bool Step::same_as(const Step& o) const {
  return kind == o.kind && name == o.name && operand == o.operand && params == o.params;
}

bool PipelineSpec::same_as(const PipelineSpec& o) const {
  if (name != o.name || steps.size() != o.steps.size()) return false;
  for (std::size_t i = 0; i < steps.size(); ++i)
    if (!steps[i].same_as(o.steps[i])) return false;
  return true;
}

namespace {

struct Token {
  enum class Kind { Word, Array, Param } kind;
  std::string text;  // word text or parameter key
  Value value;       // array or parameter value
  int column;
};

struct Statement {
  int line;
  std::vector<Token> tokens;
};

std::vector<double> parse_array(const std::string& body, int line, int column) {
  std::vector<double> out;
  std::size_t i = 0;
  while (i < body.size()) {
    if (body[i] == ',' || std::isspace(static_cast<unsigned char>(body[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < body.size() && body[j] != ',' && !std::isspace(static_cast<unsigned char>(body[j]))) ++j;
    const std::string num = body.substr(i, j - i);
    double v = 0.0;
    const char* first = num.data();
    if (!num.empty() && num[0] == '+') ++first;
    auto [end, ec] = std::from_chars(first, num.data() + num.size(), v);
    if (ec != std::errc() || end != num.data() + num.size())
      throw ParseError("invalid number '" + num + "' in array", line, column + 1 + static_cast<int>(i));
    out.push_back(v);
    i = j;
  }
  return out;
}

// Splits the text into statements of tokens, dropping comments.
std::vector<Statement> tokenize(const std::string& text) {
  std::vector<Statement> out;
  int line = 1;
  std::size_t pos = 0;
  Statement cur{1, {}};
  auto flush = [&] {
    if (!cur.tokens.empty()) out.push_back(std::move(cur));
    cur = Statement{line, {}};
  };
  while (pos < text.size()) {
    // Column of pos within the current line.
    const std::size_t line_start = text.rfind('\n', pos == 0 ? 0 : pos - 1);
    const int col = static_cast<int>(pos - (line_start == std::string::npos || pos == 0 ? 0 : line_start + 1)) + 1;
    const char c = text[pos];
    if (c == '\n') {
      ++pos;
      flush();
      ++line;
      cur.line = line;
      continue;
    }
    if (c == ';') {
      ++pos;
      flush();
      continue;
    }
    if (c == '#') {
      while (pos < text.size() && text[pos] != '\n') ++pos;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++pos;
      continue;
    }
    if (cur.tokens.empty()) cur.line = line;
    auto read_array = [&](int start_col) {
      const std::size_t close = text.find_first_of("]\n", pos);
      if (close == std::string::npos || text[close] != ']')
        throw ParseError("unterminated array", line, start_col);
      auto nums = parse_array(text.substr(pos + 1, close - pos - 1), line, start_col);
      pos = close + 1;
      return Value::array(std::move(nums));
    };
    if (c == '[') {
      cur.tokens.push_back({Token::Kind::Array, "", read_array(col), col});
      continue;
    }
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end])) && text[end] != ';' &&
           text[end] != '#' && text[end] != '[')
      ++end;
    std::string word = text.substr(pos, end - pos);
    pos = end;
    const auto eq = word.find('=');
    if (eq == std::string::npos) {
      cur.tokens.push_back({Token::Kind::Word, word, {}, col});
      continue;
    }
    const std::string key = word.substr(0, eq);
    if (key.empty()) throw ParseError("parameter without a name", line, col);
    Value v;
    if (eq + 1 == word.size() && pos < text.size() && text[pos] == '[') {
      v = read_array(col + static_cast<int>(eq) + 1);
    } else if (eq + 1 == word.size()) {
      throw ParseError("parameter '" + key + "' has no value", line, col);
    } else {
      v = Value::word(word.substr(eq + 1));
    }
    cur.tokens.push_back({Token::Kind::Param, key, std::move(v), col});
  }
  flush();
  return out;
}

StepKind step_kind(const Token& t, int line) {
  if (t.kind == Token::Kind::Word) {
    if (t.text == "load") return StepKind::Load;
    if (t.text == "convert") return StepKind::Convert;
    if (t.text == "apply") return StepKind::Apply;
    if (t.text == "extract") return StepKind::Extract;
  }
  throw ParseError("unknown step kind '" + (t.kind == Token::Kind::Word ? t.text : t.value.print()) + "'",
                   line, t.column);
}

}  // namespace

PipelineSpec parse_pipeline(const std::string& text) {
  PipelineSpec spec;
  bool named = false;
  int last_line = 1, last_col = 1;
  for (const auto& st : tokenize(text)) {
    const auto& toks = st.tokens;
    if (toks[0].kind == Token::Kind::Word && toks[0].text == "pipeline") {
      if (named || !spec.steps.empty())
        throw ParseError("'pipeline' header must come first and only once", st.line, toks[0].column);
      if (toks.size() != 2 || toks[1].kind != Token::Kind::Word)
        throw ParseError("expected 'pipeline <name>'", st.line, toks[0].column);
      spec.name = toks[1].text;
      named = true;
      continue;
    }
    Step step;
    step.kind = step_kind(toks[0], st.line);
    step.line = st.line;
    step.column = toks[0].column;
    last_line = st.line;
    last_col = toks[0].column;
    if (toks.size() < 2 || toks[1].kind != Token::Kind::Word)
      throw ParseError(to_string(step.kind) + " needs a name", st.line,
                       toks.size() < 2 ? toks[0].column : toks[1].column);
    step.name = toks[1].text;

    std::vector<std::string> allowed;
    bool wants_operand = false;
    if (step.kind == StepKind::Load) {
      const auto* sig = find_load(step.name);
      if (!sig) throw ParseError("unknown encoding '" + step.name + "'", st.line, toks[1].column);
      allowed = sig->params;
      wants_operand = true;
    } else {
      const auto* sig = find_step(step.kind, step.name);
      if (!sig)
        throw ParseError("unknown " + std::string(step.kind == StepKind::Convert ? "converter"
                                                  : step.kind == StepKind::Apply ? "oracle"
                                                                                 : "extraction method") +
                             " '" + step.name + "'",
                         st.line, toks[1].column);
      allowed = sig->params;
      wants_operand = step.kind == StepKind::Apply;
    }

    std::size_t i = 2;
    if (wants_operand) {
      if (i >= toks.size() || toks[i].kind == Token::Kind::Param)
        throw ParseError(std::string(step.kind == StepKind::Load ? "load needs a data source"
                                                                 : "apply needs a function reference"),
                         st.line, i < toks.size() ? toks[i].column : toks[1].column);
      step.operand = toks[i].kind == Token::Kind::Array ? toks[i].value : Value::word(toks[i].text);
      ++i;
    }
    for (; i < toks.size(); ++i) {
      const auto& t = toks[i];
      if (t.kind != Token::Kind::Param)
        throw ParseError("unexpected '" + (t.kind == Token::Kind::Word ? t.text : t.value.print()) +
                             "', expected key=value",
                         st.line, t.column);
      if (std::find(allowed.begin(), allowed.end(), t.text) == allowed.end())
        throw ParseError("unknown parameter '" + t.text + "' for " + step.name, st.line, t.column);
      if (step.find_param(t.text))
        throw ParseError("duplicate parameter '" + t.text + "'", st.line, t.column);
      step.params.emplace_back(t.text, t.value);
    }
    spec.steps.push_back(std::move(step));
  }

  if (spec.steps.empty()) throw ParseError("pipeline has no steps", 1, 1);
  if (spec.steps.front().kind != StepKind::Load)
    throw ParseError("pipeline must start with load", spec.steps.front().line, spec.steps.front().column);
  for (std::size_t i = 1; i < spec.steps.size(); ++i)
    if (spec.steps[i].kind == StepKind::Load)
      throw ParseError("load may only appear as the first step", spec.steps[i].line, spec.steps[i].column);
  for (std::size_t i = 0; i + 1 < spec.steps.size(); ++i)
    if (spec.steps[i].kind == StepKind::Extract)
      throw ParseError("extract must be the last step", spec.steps[i].line, spec.steps[i].column);
  if (spec.steps.back().kind != StepKind::Extract)
    throw ParseError("pipeline must end with extract", last_line, last_col);
  return spec;
}

std::string print_pipeline(const PipelineSpec& spec) {
  std::ostringstream out;
  out << "pipeline " << spec.name << '\n';
  for (const auto& s : spec.steps) {
    out << to_string(s.kind) << ' ' << s.name;
    if (s.operand) out << ' ' << s.operand->print();
    for (const auto& [k, v] : s.params) out << ' ' << k << '=' << v.print();
    out << '\n';
  }
  return out.str();
}

}  // namespace enqode
