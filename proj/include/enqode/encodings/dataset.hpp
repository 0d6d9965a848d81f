// enqode: classical data sets
// Copyright 2026 The enqode Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "enqode/sim/state_vector.hpp"

namespace enqode {

enum class DataKind { Integers, Reals, ComplexVector, ProbabilityVector };

std::string to_string(DataKind k);

struct DataSet {
  DataKind kind = DataKind::Reals;
  std::vector<cplx> values;
  /// Term amplitudes for qRAM and joint encodings. Empty means uniform.
  std::vector<cplx> weights;
  /// Per-component data for entangled encodings.
  std::vector<DataSet> parts;

  static DataSet integers(const std::vector<std::uint64_t>& xs);
  static DataSet reals(const std::vector<double>& xs);
  static DataSet complex_vector(std::vector<cplx> a);
  static DataSet probabilities(const std::vector<double>& p);

  std::size_t size() const { return values.size(); }
  std::vector<double> real_values() const;
  /// Throws EncodingDomainError for negative or non-integral entries.
  std::vector<std::uint64_t> integer_values() const;
  /// Amplitudes: the values themselves, or sqrt(p) for probability vectors.
  std::vector<cplx> amplitudes() const;

  /// Violations of the kind's invariants (normalization, nonnegativity).
  std::vector<std::string> check_kind() const;

  bool operator==(const DataSet&) const = default;
};

}  // namespace enqode
