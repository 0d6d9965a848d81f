// enqode: state-vector evolution
// Copyright 2026 The enqode Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "enqode/sim/circuit.hpp"
#include "enqode/sim/state_vector.hpp"

namespace enqode {

/// Applies one gate in place.
void apply_gate(StateVector& s, const Gate& g);

/// Returns U_c s. Throws ShapeError if the qubit counts differ.
StateVector apply_circuit(StateVector s, const Circuit& c);

/// Runs the circuit from |0...0>.
StateVector simulate(const Circuit& c);

/// Full unitary as a list of columns. Intended for small circuits.
std::vector<std::vector<cplx>> circuit_matrix(const Circuit& c);

/// Full unitary of a single gate on n qubits.
std::vector<std::vector<cplx>> gate_matrix(const Gate& g, int n_qubits);

}  // namespace enqode
