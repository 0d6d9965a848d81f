// enqode: swap test
// Copyright 2026 The enqode Authors.
// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cmath>
#include <numeric>

#include "enqode/errors.hpp"
#include "enqode/extractors/extractors.hpp"
#include "enqode/sim/permutation_marginals.hpp"
#include "enqode/sim/sampling.hpp"

namespace enqode {

Circuit swap_test_circuit(const Circuit& load_a, const Circuit& load_b) {
  const int n = load_a.n_qubits();
  if (load_b.n_qubits() != n)
    throw ShapeError("swap test needs equal register sizes (" + std::to_string(n) + " vs " +
                     std::to_string(load_b.n_qubits()) + ")");
  Circuit c(2 * n + 1);
  c.append(load_a);
  std::vector<int> shift(n);
  std::iota(shift.begin(), shift.end(), n);
  c.append(load_b, shift);
  c.add(Gate::h(2 * n));
  for (int j = 0; j < n; ++j) c.add(Gate::cswap(2 * n, j, n + j));
  c.add(Gate::h(2 * n));
  c.add_register("a", 0, n);
  c.add_register("b", n, n);
  c.add_register("ancilla", 2 * n, 1);
  return c;
}

SwapTestResult swap_test(const Circuit& load_a, const Circuit& load_b, std::uint64_t shots,
                         std::uint64_t seed) {
  const Circuit c = swap_test_circuit(load_a, load_b);
  const int anc[] = {c.n_qubits() - 1};
  const auto p = circuit_marginals(c, anc);
  SwapTestResult r;
  r.p0_exact = p[0];
  r.shots = shots;
  if (shots == 0) {
    r.p0_estimate = p[0];
  } else {
    std::uint64_t zeros = 0;
    for (auto y : sample_distribution(p, shots, seed)) zeros += (y == 0);
    r.p0_estimate = static_cast<double>(zeros) / static_cast<double>(shots);
  }
  r.overlap_estimate = std::sqrt(std::max(0.0, 2.0 * r.p0_estimate - 1.0));
  return r;
}

}  // namespace enqode
