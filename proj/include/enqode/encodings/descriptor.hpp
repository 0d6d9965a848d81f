// enqode: encoding descriptors
// Copyright 2026 The enqode Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace enqode {

struct EncodingDescriptor;

struct Basis {
  int m = 1;
  bool operator==(const Basis&) const = default;
};

/// Basis encoding through a bijection g onto {0..2^m-1}, stored as the list
/// of preimages: g(domain[k]) = k.
struct MappedBasis {
  int m = 1;
  std::vector<double> domain;
  bool operator==(const MappedBasis&) const = default;
};

struct Angle {
  int N = 1;
  bool operator==(const Angle&) const = default;
};

struct Fourier {
  int m = 1;
  bool operator==(const Fourier&) const = default;
};

struct MultiRegister {
  int m = 1;
  int N = 1;
  bool operator==(const MultiRegister&) const = default;
};

struct EquallyWeighted {
  int m = 1;
  bool operator==(const EquallyWeighted&) const = default;
};

struct Amplitude {
  int n = 1;
  bool operator==(const Amplitude&) const = default;
};

struct DivideConquer {
  int n = 1;
  bool operator==(const DivideConquer&) const = default;
};

struct Bidirectional {
  int n = 1;
  int s = 1;
  bool operator==(const Bidirectional&) const = default;
};

/// sum_i a_i |x_i>|i>, index register on the low qubits.
struct QRam {
  int index_qubits = 1;
  int value_qubits = 1;
  bool operator==(const QRam&) const = default;
};

/// Several data sets. Independent (joint = false): tensor product of the
/// components, first component on the low qubits. Joint: sum over terms t of
/// w_t times the product of basis states of the t-th values.
struct Entangled {
  std::vector<EncodingDescriptor> components;
  bool joint = false;
  bool operator==(const Entangled&) const;
};

using EncodingVariant =
    std::variant<Basis, MappedBasis, Angle, Fourier, MultiRegister, EquallyWeighted,
                 Amplitude, DivideConquer, Bidirectional, QRam, Entangled>;

struct EncodingDescriptor {
  EncodingVariant v;

  EncodingDescriptor() = default;
  template <typename T>
  EncodingDescriptor(T x) : v(std::move(x)) {}

  template <typename T>
  bool is() const {
    return std::holds_alternative<T>(v);
  }
  template <typename T>
  const T& as() const {
    return std::get<T>(v);
  }

  bool operator==(const EncodingDescriptor& o) const { return v == o.v; }
};

/// Variant name in snake case, e.g. "divide_conquer".
std::string variant_name(const EncodingDescriptor& d);
/// Name with parameters, e.g. "bidirectional{n=3,s=2}".
std::string to_string(const EncodingDescriptor& d);

/// Total qubits of the encoded state, ancillas included.
int register_width(const EncodingDescriptor& d);

/// Parameter problems (non-positive sizes, bad split level, non-bijective g).
std::vector<std::string> check_parameters(const EncodingDescriptor& d);

nlohmann::json to_json(const EncodingDescriptor& d);
EncodingDescriptor descriptor_from_json(const nlohmann::json& j);

}  // namespace enqode
