// enqode: state-preparation circuits
// Copyright 2026 The enqode Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <json.hpp>

#include "enqode/sim/circuit.hpp"
#include "enqode/sim/state_vector.hpp"

namespace enqode {

/// Upper bound on loader circuit width. Wider circuits are only evaluated
/// through exact marginals, never densely.
inline constexpr int kMaxLoaderWidth = 255;

struct ResourceReport {
  int width = 0;
  int depth = 0;
  int cnot_count = 0;
  int multi_qubit_gates = 0;
  std::uint64_t classical_preprocessing_ops = 0;
};

struct LoaderOutput {
  Circuit circuit;
  ResourceReport report;
  /// Qubits holding the encoded data, low bit first.
  std::vector<int> data_register;
  std::vector<int> ancilla_register;
};

ResourceReport make_report(const Circuit& c, std::uint64_t preprocessing_ops);
nlohmann::json to_json(const ResourceReport& r);

/// X on every set bit of x.
LoaderOutput load_basis(std::uint64_t x, int m);

/// RY(2 theta_i) on qubit i. Each theta must lie in [0, pi/2].
LoaderOutput load_angle(std::span<const double> thetas);

/// H then P(2 pi (x mod 2^(m-k)) / 2^(m-k)) on qubit k.
LoaderOutput load_fourier(std::uint64_t x, int m);

/**
 * Multiplexed-RY tree from the angle representation of |a|. Real inputs carry
 * their signs in the last level; complex inputs get a diagonal phase pass.
 * Uses 2^n - 2 CNOTs for real data and at most 2(2^n - 2) for complex data.
 */
LoaderOutput load_amplitude(std::span<const cplx> a);
LoaderOutput load_amplitude(std::span<const double> a);

/// Full set: H on all qubits. Singleton: basis loader. Otherwise the
/// amplitude loader on the normalized indicator vector.
LoaderOutput load_equally_weighted(std::span<const std::uint64_t> xs, int m);

/**
 * Binary-tree loader with one qubit per tree node and controlled-swap
 * combination. Width 2^n - 1, depth 1 + n(n-1)/2. Only the marginal of the
 * data register is |a_i|^2; the remaining qubits stay entangled.
 */
LoaderOutput load_divide_conquer(std::span<const double> a);

/**
 * Split-level loader. The top n - s tree levels are node qubits, the bottom
 * s levels are 2^(n-s) registers of s qubits loaded by local amplitude
 * loaders. s = n gives load_amplitude, s = 1 gives load_divide_conquer.
 * Width (s + 1) 2^(n-s) - 1.
 */
LoaderOutput load_bidirectional(std::span<const double> a, int s);

/// Register i (qubits i*m .. i*m+m-1) holds xs[i].
LoaderOutput load_multi_register(std::span<const std::uint64_t> xs, int m);

/// |i>|x_i> with the index register on the low qubits. Without weights the
/// index register is put in uniform superposition.
Circuit qram_oracle(std::span<const std::uint64_t> xs, int value_qubits);
LoaderOutput load_qram(std::span<const std::uint64_t> xs, int value_qubits,
                       std::span<const cplx> weights = {});

}  // namespace enqode
