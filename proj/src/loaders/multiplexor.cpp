// enqode: uniformly controlled rotations and diagonal phases
// Copyright 2026 The enqode Authors.
// SPDX-License-Identifier: Apache-2.0
#include "enqode/loaders/multiplexor.hpp"

#include <bit>

#include "enqode/errors.hpp"

namespace enqode {

std::vector<double> gray_code_angles(const std::vector<double>& alpha) {
  const std::size_t size = alpha.size();
  if (!std::has_single_bit(size)) throw ArgumentError("angle count must be a power of two");
  std::vector<double> theta(size, 0.0);
  for (std::size_t i = 0; i < size; ++i) {
    const std::size_t g = i ^ (i >> 1);
    double s = 0.0;
    for (std::size_t c = 0; c < size; ++c)
      s += (std::popcount(c & g) & 1) ? -alpha[c] : alpha[c];
    theta[i] = s / static_cast<double>(size);
  }
  return theta;
}

namespace {

void append_multiplexed(Circuit& c, GateKind kind, int target,
                        const std::vector<int>& selectors,
                        const std::vector<double>& alpha) {
  auto rot = [&](double t) {
    return kind == GateKind::RY ? Gate::ry(target, t) : Gate::rz(target, t);
  };
  const std::size_t k = selectors.size();
  if (alpha.size() != (std::size_t{1} << k))
    throw ArgumentError("multiplexed rotation needs 2^k angles for k selectors");
  if (k == 0) {
    c.add(rot(alpha[0]));
    return;
  }
  const auto theta = gray_code_angles(alpha);
  const std::size_t last = theta.size() - 1;
  for (std::size_t i = 0; i < theta.size(); ++i) {
    c.add(rot(theta[i]));
    const int bit = i == last ? static_cast<int>(k) - 1 : std::countr_zero(i + 1);
    c.add(Gate::cnot(selectors[bit], target));
  }
}

}  // namespace

void append_multiplexed_ry(Circuit& c, int target, const std::vector<int>& selectors,
                           const std::vector<double>& alpha) {
  append_multiplexed(c, GateKind::RY, target, selectors, alpha);
}

void append_multiplexed_rz(Circuit& c, int target, const std::vector<int>& selectors,
                           const std::vector<double>& alpha) {
  append_multiplexed(c, GateKind::RZ, target, selectors, alpha);
}

void append_diagonal(Circuit& c, const std::vector<int>& qubits,
                     std::vector<double> phases) {
  if (phases.size() != (std::size_t{1} << qubits.size()))
    throw ArgumentError("diagonal needs 2^n phases");
  for (std::size_t q = 0; q < qubits.size(); ++q) {
    const std::size_t half = phases.size() / 2;
    std::vector<double> alpha(half), beta(half);
    for (std::size_t j = 0; j < half; ++j) {
      alpha[j] = phases[2 * j + 1] - phases[2 * j];
      beta[j] = 0.5 * (phases[2 * j] + phases[2 * j + 1]);
    }
    std::vector<int> selectors(qubits.begin() + q + 1, qubits.end());
    append_multiplexed_rz(c, qubits[q], selectors, alpha);
    phases = std::move(beta);
  }
  if (phases[0] != 0.0) c.add(Gate::global_phase(phases[0]));
}

}  // namespace enqode
