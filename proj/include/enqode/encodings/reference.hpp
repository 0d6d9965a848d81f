// enqode: reference states and decoding
// Copyright 2026 The enqode Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "enqode/encodings/dataset.hpp"
#include "enqode/encodings/descriptor.hpp"
#include "enqode/sim/state_vector.hpp"

namespace enqode {

/// Empty iff reference_state(d, data) succeeds.
std::vector<std::string> validate(const EncodingDescriptor& d, const DataSet& data);

/**
 * The state an encoding assigns to a data set, built arithmetically from the
 * definition. Divide-and-conquer and bidirectional states are defined by the
 * output of their loaders and are only available while they fit the dense
 * simulator; use reference_marginals for wider ones.
 */
StateVector reference_state(const EncodingDescriptor& d, const DataSet& data);

/// Outcome distribution of the data register, |a_i|^2, for the amplitude
/// family (amplitude, divide_conquer, bidirectional).
std::vector<double> reference_marginals(const EncodingDescriptor& d, const DataSet& data);

/// Qubits carrying the data register (low bit first) within the full width.
std::vector<int> data_qubits(const EncodingDescriptor& d);

/**
 * Recovers the data set. Divide-and-conquer and bidirectional states decode
 * to the magnitudes |a_i| since only the data-register marginal is defined.
 * Throws DecodeError when the state is not an encoding of any data set.
 */
DataSet decode(const EncodingDescriptor& d, const StateVector& s);

}  // namespace enqode
