// enqode: digital and amplitude encodings of functions
// Copyright 2026 The enqode Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "enqode/sim/circuit.hpp"

namespace enqode {

enum class FunctionKind { Digital, Amplitude };

/// Tabulated f on {0..2^n_in - 1}. Digital values are integers below
/// 2^n_out; amplitude values lie in [0, 1] (n_out unused).
struct FunctionTable {
  FunctionKind kind = FunctionKind::Amplitude;
  int n_in = 1;
  int n_out = 1;
  std::vector<double> values;
  std::string name;

  static FunctionTable digital(int n_in, int n_out, const std::vector<std::uint64_t>& values);
  static FunctionTable amplitude(int n_in, std::vector<double> values);

  /// Empty when the table is well formed.
  std::vector<std::string> problems() const;
  double operator()(std::uint64_t x) const { return values.at(x); }
};

/// identity, square_mod (x^2 mod 2^n_out) and linear_ramp (x / (2^n_in - 1)).
FunctionTable builtin_function(const std::string& name, int n_in, int n_out = 0);

/// {"kind": "digital"|"amplitude", "n_in", "n_out", "values"}; a bare array
/// is read as an amplitude table.
FunctionTable function_from_json(const nlohmann::json& j);
nlohmann::json to_json(const FunctionTable& f);

/**
 * |x>|y> -> |x>|f(x) + y mod 2^n_out>, x on qubits 0..n_in-1 and y above.
 * One permutation gate, counted as one query.
 */
Circuit digital_oracle(const FunctionTable& f);

/// |x0>|x1>|y> -> |x0>|x1>|y + x0 + x1 mod 2^m> on three consecutive m-qubit
/// registers, built from multi-controlled X incrementers.
Circuit modular_add_circuit(int m);

/**
 * R_f|x>|0> = sqrt(1 - f(x))|x>|0> + sqrt(f(x))|x>|1>, ancilla on qubit
 * n_in, as a Gray-code multiplexed RY with angles 2 asin(sqrt f(x)). The
 * ancilla then holds the angle encoding of asin(sqrt f(x)).
 */
Circuit amplitude_oracle(const FunctionTable& f);

}  // namespace enqode
