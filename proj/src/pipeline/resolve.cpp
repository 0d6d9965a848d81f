// enqode: pipeline operand resolution
// Copyright 2026 The enqode Authors.
// SPDX-License-Identifier: Apache-2.0
#include "resolve.hpp"

#include <bit>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "enqode/encodings/io.hpp"
#include "enqode/errors.hpp"

namespace enqode::detail {

namespace {

bool parse_number(const std::string& w, double& out) {
  const char* first = w.data();
  if (!w.empty() && w[0] == '+') ++first;
  auto [end, ec] = std::from_chars(first, w.data() + w.size(), out);
  return ec == std::errc() && end == w.data() + w.size() && !w.empty();
}

std::filesystem::path resolve_path(const std::string& p, const std::filesystem::path& base_dir) {
  std::filesystem::path path(p);
  if (path.is_relative() && !base_dir.empty()) path = base_dir / path;
  return path;
}

}  // namespace

std::vector<cplx> resolve_values(const Value& v, const std::filesystem::path& base_dir) {
  if (v.kind == Value::Kind::Array) return {v.numbers.begin(), v.numbers.end()};
  double x = 0.0;
  if (parse_number(v.text, x)) return {cplx(x)};
  return read_values_file(resolve_path(v.text, base_dir).string());
}

std::vector<double> real_parts(const std::vector<cplx>& v) {
  std::vector<double> out;
  for (const auto& z : v) {
    if (z.imag() != 0.0) throw EncodingDomainError("expected real values");
    out.push_back(z.real());
  }
  return out;
}

std::vector<std::uint64_t> integer_parts(const std::vector<cplx>& v) {
  std::vector<std::uint64_t> out;
  for (double x : real_parts(v)) {
    if (x < 0 || x != std::floor(x) || x > 9.0e15)
      throw EncodingDomainError("expected nonnegative integers, got " + std::to_string(x));
    out.push_back(static_cast<std::uint64_t>(x));
  }
  return out;
}

int bit_width_min1(std::uint64_t x) { return std::max(1, static_cast<int>(std::bit_width(x))); }

int log2_size(std::size_t n, const std::string& what) {
  if (n < 2 || !std::has_single_bit(n))
    throw ShapeError(what + " needs 2^n >= 2 entries, got " + std::to_string(n));
  return std::countr_zero(n);
}

long long param_int(const Step& s, const std::string& key, long long fallback) {
  const Value* v = s.find_param(key);
  if (!v) return fallback;
  double x = 0.0;
  if (v->kind != Value::Kind::Word || !parse_number(v->text, x) || x != std::floor(x))
    throw ArgumentError("parameter " + key + " must be an integer");
  return static_cast<long long>(x);
}

double param_double(const Step& s, const std::string& key, double fallback) {
  const Value* v = s.find_param(key);
  if (!v) return fallback;
  double x = 0.0;
  if (v->kind != Value::Kind::Word || !parse_number(v->text, x))
    throw ArgumentError("parameter " + key + " must be a number");
  return x;
}

std::string param_word(const Step& s, const std::string& key, const std::string& fallback) {
  const Value* v = s.find_param(key);
  if (!v) return fallback;
  if (v->kind != Value::Kind::Word) throw ArgumentError("parameter " + key + " must be a word");
  return v->text;
}

FunctionTable resolve_function(const Step& s, int n_in, const std::filesystem::path& base_dir) {
  if (!s.operand) throw ArgumentError("missing function reference");
  const bool digital = s.name == "digital_oracle";
  const int n_out = static_cast<int>(param_int(s, "n_out", n_in));
  const Value& v = *s.operand;
  FunctionTable f;
  if (v.kind == Value::Kind::Word && (v.text == "identity" || v.text == "square_mod" || v.text == "linear_ramp")) {
    f = builtin_function(v.text, n_in, digital ? n_out : 0);
  } else if (v.kind == Value::Kind::Word && (v.text.ends_with(".json") || v.text.ends_with(".JSON"))) {
    std::ifstream in(resolve_path(v.text, base_dir));
    if (!in) throw ArgumentError("cannot open function file '" + v.text + "'");
    f = function_from_json(nlohmann::json::parse(in));
  } else {
    const auto vals = real_parts(resolve_values(v, base_dir));
    if (digital) {
      std::vector<std::uint64_t> xs;
      for (double x : vals) {
        if (x < 0 || x != std::floor(x)) throw EncodingDomainError("digital function values must be integers");
        xs.push_back(static_cast<std::uint64_t>(x));
      }
      f = FunctionTable::digital(log2_size(xs.size(), "function table"), n_out, xs);
    } else {
      f = FunctionTable::amplitude(log2_size(vals.size(), "function table"), vals);
    }
  }
  if (digital != (f.kind == FunctionKind::Digital))
    throw EncodingDomainError(std::string(digital ? "digital" : "amplitude") + " oracle needs " +
                              (digital ? "an integer-valued" : "a [0, 1]-valued") + " function");
  if (f.n_in != n_in)
    throw ShapeError("function is defined on " + std::to_string(f.values.size()) +
                     " points but the data register has 2^" + std::to_string(n_in));
  const auto problems = f.problems();
  if (!problems.empty()) throw EncodingDomainError("function table: " + problems.front());
  return f;
}

}  // namespace enqode::detail
