// enqode: pipeline type checking
// Copyright 2026 The enqode Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <vector>

#include "enqode/pipeline/spec.hpp"

namespace enqode {

struct TypedStep {
  std::optional<EncodingType> in;
  std::optional<EncodingType> out;
  /// Extraction result type.
  std::string result;
};

struct TypecheckResult {
  std::vector<TypeError> errors;
  std::vector<TypedStep> steps;
  bool ok() const { return errors.empty(); }
};

/// Threads the encoding state through the catalog. Sources are read relative
/// to base_dir to size the loaded registers.
TypecheckResult typecheck(const PipelineSpec& spec, const std::filesystem::path& base_dir = {});

/// Type of a load step, from its encoding, data size and parameters.
EncodingType load_type(const Step& step, const std::filesystem::path& base_dir = {});

/// Output type of a non-load step applied to `in`; assumes `in` is accepted.
EncodingType step_output_type(const Step& step, const EncodingType& in);

/// Qubits of the data register of a state of the given type.
int data_width(const EncodingType& t);

}  // namespace enqode
