// enqode: dense state vectors
// Copyright 2026 The enqode Authors.
// SPDX-License-Identifier: Apache-2.0
#include "enqode/sim/state_vector.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "enqode/errors.hpp"

namespace enqode {

StateVector StateVector::zero(int n) { return basis(n, 0); }

StateVector StateVector::basis(int n, std::uint64_t index) {
  if (n < 1 || n > kMaxQubits)
    throw SizeError("qubit count " + std::to_string(n) + " outside [1, " +
                    std::to_string(kMaxQubits) + "]");
  std::vector<cplx> amps(std::size_t{1} << n);
  if (index >= amps.size())
    throw ArgumentError("basis index " + std::to_string(index) + " out of range");
  amps[index] = 1.0;
  return StateVector(n, std::move(amps));
}

StateVector StateVector::from_amplitudes(std::vector<cplx> amplitudes) {
  const std::size_t d = amplitudes.size();
  if (d < 2 || !std::has_single_bit(d))
    throw ShapeError("amplitude count " + std::to_string(d) +
                     " is not a power of two >= 2");
  const int n = std::countr_zero(d);
  if (n > kMaxQubits) throw SizeError("state exceeds qubit cap");
  return StateVector(n, std::move(amplitudes));
}

double StateVector::norm_squared() const {
  double s = 0.0;
  for (const auto& a : amps_) s += std::norm(a);
  return s;
}

StateVector StateVector::tensor(const StateVector& high) const {
  const int n = n_ + high.n_;
  if (n > kMaxQubits) throw SizeError("tensor product exceeds qubit cap");
  std::vector<cplx> out(std::size_t{1} << n);
  for (std::size_t h = 0; h < high.amps_.size(); ++h)
    for (std::size_t l = 0; l < amps_.size(); ++l)
      out[(h << n_) | l] = high.amps_[h] * amps_[l];
  return StateVector(n, std::move(out));
}

cplx inner_product(const StateVector& a, const StateVector& b) {
  if (a.n_qubits() != b.n_qubits())
    throw ShapeError("inner product of states on " + std::to_string(a.n_qubits()) +
                     " and " + std::to_string(b.n_qubits()) + " qubits");
  cplx s = 0.0;
  for (std::size_t i = 0; i < a.dimension(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

double fidelity(const StateVector& a, const StateVector& b) {
  return std::norm(inner_product(a, b));
}

double vector_fidelity(std::span<const cplx> a, std::span<const cplx> b) {
  if (a.size() != b.size()) throw ShapeError("vector length mismatch");
  cplx ip = 0.0;
  double na = 0.0, nb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ip += std::conj(a[i]) * b[i];
    na += std::norm(a[i]);
    nb += std::norm(b[i]);
  }
  if (na == 0.0 || nb == 0.0) return 0.0;
  return std::norm(ip) / (na * nb);
}

std::uint64_t gather_bits(std::uint64_t index, std::span<const int> qubits) {
  std::uint64_t v = 0;
  for (std::size_t k = 0; k < qubits.size(); ++k)
    v |= ((index >> qubits[k]) & 1ULL) << k;
  return v;
}

std::uint64_t scatter_bits(std::uint64_t index, std::uint64_t value,
                           std::span<const int> qubits) {
  for (std::size_t k = 0; k < qubits.size(); ++k) {
    const std::uint64_t bit = 1ULL << qubits[k];
    index = ((value >> k) & 1ULL) ? (index | bit) : (index & ~bit);
  }
  return index;
}

std::vector<double> marginal_probabilities(const StateVector& s,
                                           std::span<const int> qubits) {
  if (qubits.empty()) throw ArgumentError("marginal over an empty register");
  for (int q : qubits)
    if (q < 0 || q >= s.n_qubits())
      throw ArgumentError("qubit " + std::to_string(q) + " outside the state");
  std::vector<double> p(std::size_t{1} << qubits.size());
  const auto& a = s.amplitudes();
  for (std::size_t i = 0; i < a.size(); ++i) p[gather_bits(i, qubits)] += std::norm(a[i]);
  return p;
}

}  // namespace enqode
