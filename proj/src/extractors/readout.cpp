// enqode: basis and mode readout, naive estimation
// Copyright 2026 The enqode Authors.
// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cmath>

#include <boost/math/distributions/normal.hpp>

#include "enqode/errors.hpp"
#include "enqode/extractors/extractors.hpp"
#include "enqode/sim/permutation_marginals.hpp"
#include "enqode/sim/sampling.hpp"

namespace enqode {

nlohmann::json to_json(const EstimateResult& r) {
  return {{"estimate", r.estimate},   {"ci", r.error_target},    {"confidence", r.confidence},
          {"shots", r.shots_used},    {"queries", r.oracle_queries}, {"method", r.method}};
}

std::uint64_t basis_readout(const StateVector& s, std::span<const int> qubits) {
  const auto p = marginal_probabilities(s, qubits);
  const auto best = std::max_element(p.begin(), p.end());
  if (*best < 1.0 - 1e-9)
    throw NotDeterministicError("register is in superposition (largest outcome probability " +
                                std::to_string(*best) + ")");
  return static_cast<std::uint64_t>(best - p.begin());
}

ModeResult mode_from_distribution(std::span<const double> probabilities, std::uint64_t shots,
                                  std::uint64_t seed, ModeStrategy strategy) {
  if (shots == 0) throw ArgumentError("mode readout needs at least one shot");
  ModeResult r;
  for (auto y : sample_distribution(probabilities, shots, seed)) ++r.histogram[y];
  if (strategy == ModeStrategy::Mode) {
    std::uint64_t best = 0;
    for (const auto& [y, count] : r.histogram)  // ascending, so ties keep the smaller y
      if (count > best) {
        best = count;
        r.mode = y;
      }
  } else {
    std::uint64_t seen = 0;
    for (const auto& [y, count] : r.histogram) {
      seen += count;
      if (2 * seen >= shots) {
        r.mode = y;
        break;
      }
    }
  }
  return r;
}

ModeResult mode_readout(const StateVector& s, std::span<const int> qubits, std::uint64_t shots,
                        std::uint64_t seed, ModeStrategy strategy) {
  const auto p = marginal_probabilities(s, qubits);
  return mode_from_distribution(p, shots, seed, strategy);
}

double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) throw ArgumentError("quantile argument must lie in (0, 1)");
  return boost::math::quantile(boost::math::normal_distribution<double>(), p);
}

std::uint64_t required_shots(double eps, double alpha, double p) {
  if (!(eps > 0.0)) throw ArgumentError("error target must be positive");
  if (!(alpha > 0.0 && alpha < 1.0)) throw ArgumentError("confidence must lie in (0, 1)");
  if (!(p >= 0.0 && p <= 1.0)) throw ArgumentError("p must lie in [0, 1]");
  const double z = normal_quantile((1.0 + alpha) / 2.0);
  return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::ceil(p * (1 - p) * z * z / (eps * eps))));
}

EstimateResult naive_estimate_from_probability(double p1, std::uint64_t shots, double alpha,
                                               std::uint64_t seed) {
  if (shots == 0) throw ArgumentError("naive estimation needs at least one shot");
  const double p[] = {1.0 - p1, p1};
  std::uint64_t ones = 0;
  for (auto y : sample_distribution(p, shots, seed)) ones += y;
  EstimateResult r;
  r.method = "naive";
  r.estimate = static_cast<double>(ones) / static_cast<double>(shots);
  r.confidence = alpha;
  r.error_target = normal_quantile((1.0 + alpha) / 2.0) *
                   std::sqrt(r.estimate * (1 - r.estimate) / static_cast<double>(shots));
  r.shots_used = shots;
  r.oracle_queries = shots;
  return r;
}

EstimateResult naive_amplitude_estimate(const Circuit& f, int flag_qubit, std::uint64_t shots,
                                        double alpha, std::uint64_t seed) {
  const int flag[] = {flag_qubit};
  return naive_estimate_from_probability(circuit_marginals(f, flag)[1], shots, alpha, seed);
}

}  // namespace enqode
