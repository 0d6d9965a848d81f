// enqode: classical data sets
// Copyright 2026 The enqode Authors.
// SPDX-License-Identifier: Apache-2.0
#include "enqode/encodings/dataset.hpp"

#include <cmath>

#include "enqode/errors.hpp"

namespace enqode {

std::string to_string(DataKind k) {
  switch (k) {
    case DataKind::Integers: return "integers";
    case DataKind::Reals: return "reals";
    case DataKind::ComplexVector: return "normalized-complex-vector";
    case DataKind::ProbabilityVector: return "probability-vector";
  }
  return "unknown";
}

DataSet DataSet::integers(const std::vector<std::uint64_t>& xs) {
  DataSet d;
  d.kind = DataKind::Integers;
  for (auto x : xs) d.values.emplace_back(static_cast<double>(x), 0.0);
  return d;
}

DataSet DataSet::reals(const std::vector<double>& xs) {
  DataSet d;
  d.kind = DataKind::Reals;
  for (auto x : xs) d.values.emplace_back(x, 0.0);
  return d;
}

DataSet DataSet::complex_vector(std::vector<cplx> a) {
  DataSet d;
  d.kind = DataKind::ComplexVector;
  d.values = std::move(a);
  return d;
}

DataSet DataSet::probabilities(const std::vector<double>& p) {
  DataSet d = reals(p);
  d.kind = DataKind::ProbabilityVector;
  return d;
}

std::vector<double> DataSet::real_values() const {
  std::vector<double> out;
  out.reserve(values.size());
  for (const auto& v : values) {
    if (v.imag() != 0.0) throw EncodingDomainError("complex value where a real was expected");
    out.push_back(v.real());
  }
  return out;
}

std::vector<std::uint64_t> DataSet::integer_values() const {
  std::vector<std::uint64_t> out;
  out.reserve(values.size());
  for (const auto& v : values) {
    const double r = v.real();
    if (v.imag() != 0.0 || r < 0.0 || r != std::floor(r) || r >= 1.8e19)
      throw EncodingDomainError("value " + std::to_string(r) + " is not a nonnegative integer");
    out.push_back(static_cast<std::uint64_t>(r));
  }
  return out;
}

std::vector<cplx> DataSet::amplitudes() const {
  if (kind != DataKind::ProbabilityVector) return values;
  std::vector<cplx> out;
  out.reserve(values.size());
  for (const auto& v : values) out.emplace_back(std::sqrt(std::max(0.0, v.real())), 0.0);
  return out;
}

std::vector<std::string> DataSet::check_kind() const {
  std::vector<std::string> out;
  switch (kind) {
    case DataKind::ProbabilityVector: {
      double s = 0.0;
      for (const auto& v : values) {
        if (v.imag() != 0.0 || v.real() < 0.0) {
          out.push_back("probability entries must be nonnegative reals");
          break;
        }
        s += v.real();
      }
      if (std::abs(s - 1.0) > 1e-12) out.push_back("probabilities do not sum to 1");
      break;
    }
    case DataKind::ComplexVector: {
      double s = 0.0;
      for (const auto& v : values) s += std::norm(v);
      if (std::abs(s - 1.0) > 1e-12) out.push_back("not normalized");
      break;
    }
    case DataKind::Integers:
      for (const auto& v : values)
        if (v.imag() != 0.0 || v.real() < 0.0 || v.real() != std::floor(v.real())) {
          out.push_back("entries must be nonnegative integers");
          break;
        }
      break;
    case DataKind::Reals:
      for (const auto& v : values)
        if (v.imag() != 0.0) {
          out.push_back("entries must be real");
          break;
        }
      break;
  }
  return out;
}

}  // namespace enqode
