// enqode: seeded measurement sampling
// Copyright 2026 The enqode Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "enqode/sim/rng.hpp"
#include "enqode/sim/state_vector.hpp"

namespace enqode {

/// Draws indices from a fixed discrete distribution by inverse CDF lookup.
class DiscreteSampler {
 public:
  explicit DiscreteSampler(std::span<const double> probabilities);

  std::uint64_t operator()(Rng& rng) const;
  std::size_t size() const noexcept { return cdf_.size(); }

 private:
  std::vector<double> cdf_;
};

struct MeasuredRegister {
  std::string name;
  std::vector<int> qubits;
};

struct ShotRecord {
  std::map<std::string, std::uint64_t> measured_bits;
  std::uint64_t shot_index = 0;
  std::uint64_t seed = 0;
};

/// i.i.d. shots of the joint outcome of the listed registers.
std::vector<ShotRecord> sample_shots(const StateVector& s,
                                     const std::vector<MeasuredRegister>& registers,
                                     std::uint64_t shots, std::uint64_t seed);

/// Outcomes of a single register, one entry per shot.
std::vector<std::uint64_t> sample_register(const StateVector& s,
                                           std::span<const int> qubits,
                                           std::uint64_t shots,
                                           std::uint64_t seed);

/// Outcomes drawn from an explicit distribution.
std::vector<std::uint64_t> sample_distribution(std::span<const double> probabilities,
                                               std::uint64_t shots,
                                               std::uint64_t seed);

}  // namespace enqode
