// enqode: exact marginals for circuits wider than the dense limit
// Copyright 2026 The enqode Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "enqode/sim/circuit.hpp"

namespace enqode {

/**
 * Outcome distribution of `qubits` after running `c` from |0...0>, for
 * circuits too wide to simulate densely.
 *
 * The circuit is split after its last gate that is neither classical nor
 * diagonal. The prefix must factor into independent qubit blocks of at most
 * `max_block` qubits, each simulated densely. The suffix may only contain
 * X, Swap, Permutation (with any controls) and diagonal gates; outcome
 * probabilities are pulled back through it by propagating bit constraints
 * backwards, branching on unconstrained controls. Throws CapacityError when
 * a block is too large or the number of branches exceeds `max_branches`.
 */
std::vector<double> classical_tail_marginals(const Circuit& c,
                                             std::span<const int> qubits,
                                             int max_block = 20,
                                             std::size_t max_branches = 1u << 20);

/// Dense marginals when the circuit fits in the simulator, the classical-tail
/// evaluator otherwise.
std::vector<double> circuit_marginals(const Circuit& c, std::span<const int> qubits);

}  // namespace enqode
