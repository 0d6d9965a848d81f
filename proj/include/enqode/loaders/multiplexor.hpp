// enqode: uniformly controlled rotations and diagonal phases
// Copyright 2026 The enqode Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "enqode/sim/circuit.hpp"

namespace enqode {

/**
 * Rotation angles for the Gray-code sequence of a multiplexed rotation with k
 * selectors: theta_i = 2^-k sum_c (-1)^popcount(c & gray(i)) alpha_c.
 */
std::vector<double> gray_code_angles(const std::vector<double>& alpha);

/// Appends RY(alpha[c]) on `target` conditioned on the selector value c,
/// as 2^k RY gates interleaved with 2^k CNOTs (none when k = 0).
void append_multiplexed_ry(Circuit& c, int target, const std::vector<int>& selectors,
                           const std::vector<double>& alpha);

/// Same decomposition for RZ.
void append_multiplexed_rz(Circuit& c, int target, const std::vector<int>& selectors,
                           const std::vector<double>& alpha);

/**
 * Appends diag(e^{i phases[x]}) on `qubits` (qubits[0] low bit) as a cascade
 * of multiplexed RZ gates plus a global phase.
 */
void append_diagonal(Circuit& c, const std::vector<int>& qubits,
                     std::vector<double> phases);

}  // namespace enqode
