// enqode: pipeline operand resolution (internal)
// Copyright 2026 The enqode Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "enqode/functions/functions.hpp"
#include "enqode/pipeline/spec.hpp"
#include "enqode/sim/state_vector.hpp"

namespace enqode::detail {

/// Inline array, a single number, or a CSV/JSON file relative to base_dir.
std::vector<cplx> resolve_values(const Value& v, const std::filesystem::path& base_dir);
std::vector<double> real_parts(const std::vector<cplx>& v);
std::vector<std::uint64_t> integer_parts(const std::vector<cplx>& v);

/// Bits needed for x, at least 1.
int bit_width_min1(std::uint64_t x);
/// log2 of a power-of-two size >= 2; throws ShapeError otherwise.
int log2_size(std::size_t n, const std::string& what);

long long param_int(const Step& s, const std::string& key, long long fallback);
double param_double(const Step& s, const std::string& key, double fallback);
std::string param_word(const Step& s, const std::string& key, const std::string& fallback);

/**
 * Function reference of an apply step: a built-in name, an inline array or
 * a JSON/CSV file. n_in is the data register width of the input state.
 */
FunctionTable resolve_function(const Step& s, int n_in, const std::filesystem::path& base_dir);

}  // namespace enqode::detail
