// enqode: digital and amplitude encodings of functions
// Copyright 2026 The enqode Authors.
// SPDX-License-Identifier: Apache-2.0
#include "enqode/functions/functions.hpp"

#include <cmath>
#include <numeric>

#include "enqode/errors.hpp"
#include "enqode/loaders/multiplexor.hpp"

namespace enqode {

namespace {

constexpr int kMaxTableQubits = 20;

void throw_if_invalid(const FunctionTable& f) {
  const auto p = f.problems();
  if (!p.empty()) throw EncodingDomainError("function table: " + p.front());
}

}  // namespace

FunctionTable FunctionTable::digital(int n_in, int n_out, const std::vector<std::uint64_t>& values) {
  FunctionTable f;
  f.kind = FunctionKind::Digital;
  f.n_in = n_in;
  f.n_out = n_out;
  for (auto v : values) f.values.push_back(static_cast<double>(v));
  return f;
}

FunctionTable FunctionTable::amplitude(int n_in, std::vector<double> values) {
  FunctionTable f;
  f.kind = FunctionKind::Amplitude;
  f.n_in = n_in;
  f.n_out = 1;
  f.values = std::move(values);
  return f;
}

std::vector<std::string> FunctionTable::problems() const {
  std::vector<std::string> out;
  if (n_in < 1 || n_in > kMaxTableQubits) {
    out.push_back("n_in must be in [1, " + std::to_string(kMaxTableQubits) + "]");
    return out;
  }
  if (values.size() != (std::size_t{1} << n_in))
    out.push_back("table has " + std::to_string(values.size()) + " entries, expected 2^" +
                  std::to_string(n_in));
  if (kind == FunctionKind::Digital) {
    if (n_out < 1 || n_in + n_out > kMaxTableQubits) out.push_back("n_out out of range");
    for (double v : values)
      if (v < 0 || v != std::floor(v) || (n_out < 63 && v >= std::ldexp(1.0, n_out))) {
        out.push_back("digital value " + std::to_string(v) + " does not fit in " +
                      std::to_string(n_out) + " output qubits");
        break;
      }
  } else {
    for (double v : values)
      if (!(v >= 0.0 && v <= 1.0)) {
        out.push_back("amplitude value " + std::to_string(v) + " outside [0, 1]");
        break;
      }
  }
  return out;
}

FunctionTable builtin_function(const std::string& name, int n_in, int n_out) {
  if (n_in < 1 || n_in > kMaxTableQubits) throw SizeError("n_in out of range");
  const std::uint64_t N = std::uint64_t{1} << n_in;
  FunctionTable f;
  if (name == "identity") {
    std::vector<std::uint64_t> v(N);
    std::iota(v.begin(), v.end(), 0);
    f = FunctionTable::digital(n_in, n_out > 0 ? n_out : n_in, v);
  } else if (name == "square_mod") {
    const int out = n_out > 0 ? n_out : n_in;
    std::vector<std::uint64_t> v(N);
    for (std::uint64_t x = 0; x < N; ++x) v[x] = (x * x) % (std::uint64_t{1} << out);
    f = FunctionTable::digital(n_in, out, v);
  } else if (name == "linear_ramp") {
    std::vector<double> v(N);
    for (std::uint64_t x = 0; x < N; ++x) v[x] = static_cast<double>(x) / static_cast<double>(N - 1);
    f = FunctionTable::amplitude(n_in, v);
  } else {
    throw ArgumentError("unknown built-in function '" + name + "'");
  }
  f.name = name;
  return f;
}

FunctionTable function_from_json(const nlohmann::json& j) {
  auto log2_size = [](std::size_t n) {
    int k = 0;
    while ((std::size_t{1} << k) < n) ++k;
    return k;
  };
  if (j.is_array()) {
    auto v = j.get<std::vector<double>>();
    const int n = log2_size(v.size());
    auto f = FunctionTable::amplitude(n, std::move(v));
    throw_if_invalid(f);
    return f;
  }
  if (!j.is_object() || !j.contains("values"))
    throw ArgumentError("function JSON needs a \"values\" array");
  FunctionTable f;
  const std::string kind = j.value("kind", std::string("amplitude"));
  if (kind == "digital") {
    f.kind = FunctionKind::Digital;
  } else if (kind == "amplitude") {
    f.kind = FunctionKind::Amplitude;
  } else {
    throw ArgumentError("unknown function kind '" + kind + "'");
  }
  f.values = j.at("values").get<std::vector<double>>();
  f.n_in = j.value("n_in", log2_size(f.values.size()));
  f.n_out = j.value("n_out", f.kind == FunctionKind::Digital ? f.n_in : 1);
  f.name = j.value("name", std::string());
  throw_if_invalid(f);
  return f;
}

nlohmann::json to_json(const FunctionTable& f) {
  nlohmann::json j{{"kind", f.kind == FunctionKind::Digital ? "digital" : "amplitude"},
                   {"n_in", f.n_in},
                   {"values", f.values}};
  if (f.kind == FunctionKind::Digital) j["n_out"] = f.n_out;
  if (!f.name.empty()) j["name"] = f.name;
  return j;
}

Circuit digital_oracle(const FunctionTable& f) {
  throw_if_invalid(f);
  if (f.kind != FunctionKind::Digital)
    throw ArgumentError("digital oracle needs a digital function table");
  const int w = f.n_in + f.n_out;
  const std::uint64_t xmask = (std::uint64_t{1} << f.n_in) - 1;
  const std::uint64_t ymod = std::uint64_t{1} << f.n_out;
  std::vector<std::uint64_t> table(std::uint64_t{1} << w);
  for (std::uint64_t v = 0; v < table.size(); ++v) {
    const std::uint64_t x = v & xmask, y = v >> f.n_in;
    const auto fx = static_cast<std::uint64_t>(f.values[x]);
    table[v] = x | (((fx + y) % ymod) << f.n_in);
  }
  std::vector<int> qubits(w);
  std::iota(qubits.begin(), qubits.end(), 0);
  Circuit c(w);
  Gate g = Gate::permutation(std::move(qubits), std::move(table));
  g.query = true;
  c.add(std::move(g));
  c.add_register("x", 0, f.n_in);
  c.add_register("y", f.n_in, f.n_out);
  return c;
}

Circuit modular_add_circuit(int m) {
  if (m < 1 || 3 * m > kMaxTableQubits) throw SizeError("adder register size out of range");
  Circuit c(3 * m);
  const int y0 = 2 * m;
  // Adds 2^i to y when `control` is set: ripple from the top bit down so each
  // flip sees the lower bits before they change.
  auto add_power = [&](int control, int i) {
    for (int j = m - 1; j >= i; --j) {
      std::vector<int> ctl{control};
      for (int k = i; k < j; ++k) ctl.push_back(y0 + k);
      c.add(Gate::x(y0 + j).controlled_by(ctl));
    }
  };
  for (int reg = 0; reg < 2; ++reg)
    for (int i = 0; i < m; ++i) add_power(reg * m + i, i);
  c.add_register("x0", 0, m);
  c.add_register("x1", m, m);
  c.add_register("y", y0, m);
  return c;
}

Circuit amplitude_oracle(const FunctionTable& f) {
  throw_if_invalid(f);
  if (f.kind != FunctionKind::Amplitude)
    throw ArgumentError("amplitude oracle needs values in [0, 1]");
  std::vector<double> angles(f.values.size());
  for (std::size_t x = 0; x < angles.size(); ++x) angles[x] = 2.0 * std::asin(std::sqrt(f.values[x]));
  std::vector<int> selectors(f.n_in);
  std::iota(selectors.begin(), selectors.end(), 0);
  Circuit c(f.n_in + 1);
  append_multiplexed_ry(c, f.n_in, selectors, angles);
  c.add_register("x", 0, f.n_in);
  c.add_register("flag", f.n_in, 1);
  return c;
}

}  // namespace enqode
