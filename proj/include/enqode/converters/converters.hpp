// enqode: encoding converters
// Copyright 2026 The enqode Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "enqode/sim/circuit.hpp"
#include "enqode/sim/state_vector.hpp"

namespace enqode {

/**
 * QFT|x> = 2^(-m/2) sum_y e^(2 pi i x y / 2^m) |y>, qubit 0 least significant.
 * Ends with the qubit-reversal swaps so the matrix is exactly the DFT.
 */
Circuit qft_circuit(int m);
Circuit inverse_qft_circuit(int m);

/**
 * Preparation of N^(-1/2) sum_i |i>|d_i> as an index-register loader followed
 * by a digit oracle |i>|y> -> |i>|y xor code(d_i)>.
 *
 * The digit register has m + 1 qubits holding round(d * 2^m): m fractional
 * binary digits plus a units bit, so that d = 1 is representable.
 */
struct DigitLoader {
  int index_qubits = 0;
  int digit_qubits = 0;
  Circuit index_prep{1};
  Circuit oracle{1};

  int width() const { return index_qubits + digit_qubits; }
  /// U_D: index_prep then oracle.
  Circuit circuit() const;
};

/// digits must be multiples of 2^-m in [0, 1]; N = digits.size() >= 1.
DigitLoader make_digit_loader(std::span<const double> digits, int m);

struct EwToAmplitudeResult {
  /// Post-measurement state of every qubit (ancilla last).
  StateVector state;
  bool success = false;
  /// Exact ancilla-1 probability N^-1 sum d_i^2 of the simulated circuit.
  double success_probability = 0.0;
  /// Normalized index-register state when success is true.
  std::optional<StateVector> data;
  Circuit circuit{1};
};

/**
 * U_D, a digit-controlled RY onto a fresh ancilla with angle 2 asin(d),
 * one U_D^dagger to clear the digits, and the index preparation again to
 * restore the index register. Post-selects ancilla = 1 by projecting; the
 * outcome is drawn from Rng(seed) against the exact probability.
 */
EwToAmplitudeResult convert_ew_to_amplitude(const DigitLoader& u_d, std::uint64_t seed);

/// Fraction of successes over `trials` runs seeded derive_seed(seed, t);
/// identical to calling convert_ew_to_amplitude per trial.
double ew_to_amplitude_success_frequency(const DigitLoader& u_d, std::uint64_t trials,
                                         std::uint64_t seed);

/**
 * Amplitude to equally-weighted conversion by phase estimation.
 *
 * Registers: index (n), work (n, where U_A acts), phase (m), digits (m).
 * For each index i, G_i = U_A S_0 U_A^dagger S_i rotates by 2 theta_i with
 * sin(theta_i) = d_i, so phase estimation yields y or 2^m - y where
 * theta_i = pi y / 2^m. The folded value k = min(y, 2^m - y) is xor-ed into
 * the digit register and the estimation is run backwards to release the
 * work and phase registers. Digit value k stands for d = sin(pi k / 2^m).
 * Uses 2 (2^m - 1) controlled G applications, each with one U_A and one
 * U_A^dagger.
 */
struct AmplitudeToEw {
  Circuit circuit{1};
  int index_qubits = 0;
  int m = 0;
  std::vector<int> index_register;
  std::vector<int> digit_register;
};

AmplitudeToEw convert_amplitude_to_ew(const Circuit& u_a, int m);

/// Nearest digit value k in [0, 2^(m-1)] for amplitude d.
std::uint64_t amplitude_to_digit(double d, int m);
double digit_to_amplitude(std::uint64_t k, int m);

/**
 * Fidelity of the (index, digit) reduced state with N^(-1/2) sum_i |i>|k_i>,
 * where N = 2^index_qubits. The other qubits are traced out.
 */
double ew_fidelity(const StateVector& s, const AmplitudeToEw& conv,
                   std::span<const std::uint64_t> digits);

/// Conditional digit distribution for each index value: out[i][k].
std::vector<std::vector<double>> ew_digit_distribution(const StateVector& s,
                                                      const AmplitudeToEw& conv);

}  // namespace enqode
