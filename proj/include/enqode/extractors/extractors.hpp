// enqode: information extraction from encoded states
// Copyright 2026 The enqode Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "enqode/sim/circuit.hpp"
#include "enqode/sim/state_vector.hpp"

namespace enqode {

struct EstimateResult {
  double estimate = 0.0;
  /// Half-width of the reported interval at `confidence`.
  double error_target = 0.0;
  double confidence = 0.0;
  std::uint64_t shots_used = 0;
  /// Applications of F (forward or inverse).
  std::uint64_t oracle_queries = 0;
  std::string method;
};

nlohmann::json to_json(const EstimateResult& r);

/// The single outcome of `qubits`, which must carry probability >= 1 - 1e-9.
std::uint64_t basis_readout(const StateVector& s, std::span<const int> qubits);

enum class ModeStrategy { Mode, Median };

struct ModeResult {
  std::uint64_t mode = 0;
  std::map<std::uint64_t, std::uint64_t> histogram;
};

/// Most frequent of `shots` sampled outcomes, ties to the smaller value. The
/// median strategy returns the lower median instead.
ModeResult mode_readout(const StateVector& s, std::span<const int> qubits, std::uint64_t shots,
                        std::uint64_t seed, ModeStrategy strategy = ModeStrategy::Mode);

/// Same from an explicit outcome distribution.
ModeResult mode_from_distribution(std::span<const double> probabilities, std::uint64_t shots,
                                  std::uint64_t seed, ModeStrategy strategy = ModeStrategy::Mode);

/// Phi^-1(p) for the standard normal.
double normal_quantile(double p);

/// ceil(p (1 - p) Phi^-1((1 + alpha) / 2)^2 / eps^2).
std::uint64_t required_shots(double eps, double alpha, double p);

/// Flag frequency over `shots` samples of F|0>, with the normal-approximation
/// interval at confidence alpha. One query per shot.
EstimateResult naive_amplitude_estimate(const Circuit& f, int flag_qubit, std::uint64_t shots,
                                        double alpha, std::uint64_t seed);

/// Naive estimation when the flag probability p1 is already known.
EstimateResult naive_estimate_from_probability(double p1, std::uint64_t shots, double alpha,
                                               std::uint64_t seed);

/**
 * Q = -F S_0 F^dagger S_flag, where S_0 = I - 2|0><0| and S_flag is Z on the
 * flag. With mu = |flag = 1 amplitude|^2 = sin^2(theta), Q rotates by 2 theta
 * in the plane of F|0>.
 */
Circuit grover_operator(const Circuit& f, int flag_qubit);

/**
 * F on qubits 0..w-1, precision qubits w..w+m-1 (low bit first): H on each,
 * controlled Q^(2^j) from precision qubit j, inverse QFT.
 */
Circuit qae_circuit(const Circuit& f, int flag_qubit, int m);

/// Exact distribution of the precision register, 2^m entries.
std::vector<double> qae_distribution(const Circuit& f, int flag_qubit, int m);

/// sin^2(pi y / 2^m).
double qae_value(std::uint64_t y, int m);

/// 2 pi sqrt(mu (1 - mu)) 2^-m + pi^2 2^-2m.
double qae_error_bound(double mu, int m);

/// F applications for one QAE shot: one F plus two per Grover step.
std::uint64_t qae_queries_per_shot(int m);

/**
 * Samples the precision register `shots` times and reports the most frequent
 * mu estimate (ties to the smaller). shots = 1 is canonical QAE.
 */
EstimateResult qae_estimate(const Circuit& f, int flag_qubit, int m, std::uint64_t shots,
                            std::uint64_t seed);

struct SwapTestResult {
  double p0_exact = 0.0;
  double p0_estimate = 0.0;
  double overlap_estimate = 0.0;
  std::uint64_t shots = 0;
};

/// load_a on qubits 0..n-1, load_b on n..2n-1, ancilla 2n.
Circuit swap_test_circuit(const Circuit& load_a, const Circuit& load_b);

/// shots = 0 skips sampling and reports the exact p0.
SwapTestResult swap_test(const Circuit& load_a, const Circuit& load_b, std::uint64_t shots,
                         std::uint64_t seed);

}  // namespace enqode
