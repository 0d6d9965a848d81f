// enqode: dense state vectors
// Copyright 2026 The enqode Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace enqode {

using cplx = std::complex<double>;

inline constexpr int kMaxQubits = 24;

/// Pure state over n qubits. Qubit 0 is the least significant bit of the
/// basis index.
class StateVector {
 public:
  /// |0...0> on n qubits, 1 <= n <= kMaxQubits.
  static StateVector zero(int n);
  static StateVector basis(int n, std::uint64_t index);
  /// Wraps amplitudes whose length is a power of two. Not renormalized.
  static StateVector from_amplitudes(std::vector<cplx> amplitudes);

  int n_qubits() const noexcept { return n_; }
  std::size_t dimension() const noexcept { return amps_.size(); }

  const std::vector<cplx>& amplitudes() const noexcept { return amps_; }
  std::vector<cplx>& data() noexcept { return amps_; }
  cplx operator[](std::size_t i) const { return amps_[i]; }

  double norm_squared() const;

  /// This state on the low qubits, `high` on the qubits above.
  StateVector tensor(const StateVector& high) const;

 private:
  StateVector(int n, std::vector<cplx> amps) : n_(n), amps_(std::move(amps)) {}

  int n_;
  std::vector<cplx> amps_;
};

cplx inner_product(const StateVector& a, const StateVector& b);

/// |<a|b>|^2. Throws ShapeError on a qubit-count mismatch.
double fidelity(const StateVector& a, const StateVector& b);

/// Fidelity of two unnormalized amplitude vectors after normalizing both.
double vector_fidelity(std::span<const cplx> a, std::span<const cplx> b);

/**
 * Outcome distribution of the listed qubits. Entry k sums |a_i|^2 over basis
 * states whose bits on `qubits` spell k, with qubits[0] as the low bit.
 */
std::vector<double> marginal_probabilities(const StateVector& s,
                                           std::span<const int> qubits);

/// Extracts the value spelled by `qubits` (low bit first) from a basis index.
std::uint64_t gather_bits(std::uint64_t index, std::span<const int> qubits);

/// Inverse of gather_bits: writes `value` into the listed qubit positions.
std::uint64_t scatter_bits(std::uint64_t index, std::uint64_t value,
                           std::span<const int> qubits);

}  // namespace enqode
