// enqode: seeded measurement sampling
// Copyright 2026 The enqode Authors.
// SPDX-License-Identifier: Apache-2.0
#include "enqode/sim/sampling.hpp"

#include <algorithm>
#include <numeric>

#include "enqode/errors.hpp"

namespace enqode {

DiscreteSampler::DiscreteSampler(std::span<const double> probabilities) {
  if (probabilities.empty()) throw ArgumentError("empty distribution");
  cdf_.resize(probabilities.size());
  std::partial_sum(probabilities.begin(), probabilities.end(), cdf_.begin());
}

std::uint64_t DiscreteSampler::operator()(Rng& rng) const {
  const double u = rng.uniform() * cdf_.back();
  auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
  if (it == cdf_.end()) --it;
  return static_cast<std::uint64_t>(it - cdf_.begin());
}

std::vector<std::uint64_t> sample_distribution(std::span<const double> probabilities,
                                               std::uint64_t shots,
                                               std::uint64_t seed) {
  if (shots < 1) throw ArgumentError("shots must be at least 1");
  DiscreteSampler sampler(probabilities);
  Rng rng(seed);
  std::vector<std::uint64_t> out(shots);
  for (auto& o : out) o = sampler(rng);
  return out;
}

std::vector<ShotRecord> sample_shots(const StateVector& s,
                                     const std::vector<MeasuredRegister>& registers,
                                     std::uint64_t shots, std::uint64_t seed) {
  if (shots < 1) throw ArgumentError("shots must be at least 1");
  std::vector<int> all;
  for (const auto& r : registers) all.insert(all.end(), r.qubits.begin(), r.qubits.end());
  const auto joint = marginal_probabilities(s, all);
  const auto draws = sample_distribution(joint, shots, seed);
  std::vector<ShotRecord> out(shots);
  for (std::uint64_t k = 0; k < shots; ++k) {
    std::uint64_t v = draws[k];
    out[k].shot_index = k;
    out[k].seed = seed;
    for (const auto& r : registers) {
      const std::uint64_t mask = (1ULL << r.qubits.size()) - 1;
      out[k].measured_bits[r.name] = v & mask;
      v >>= r.qubits.size();
    }
  }
  return out;
}

std::vector<std::uint64_t> sample_register(const StateVector& s,
                                           std::span<const int> qubits,
                                           std::uint64_t shots, std::uint64_t seed) {
  return sample_distribution(marginal_probabilities(s, qubits), shots, seed);
}

}  // namespace enqode
