// enqode: pipeline execution
// Copyright 2026 The enqode Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>

#include <json.hpp>

#include "enqode/errors.hpp"
#include "enqode/pipeline/spec.hpp"

namespace enqode {

struct ExecOptions {
  std::filesystem::path base_dir;
  /// Adds wall_time_s to the report, which then differs between runs.
  bool timing = false;
};

/// Module error raised while running a step, tagged with the step index.
class ExecutionError : public Error {
 public:
  ExecutionError(int step, const std::string& what)
      : Error("step " + std::to_string(step) + ": " + what), step_(step) {}
  int step() const noexcept { return step_; }

 private:
  int step_;
};

/// Spec rejected by the type checker; the message lists every error.
class PipelineTypeError : public Error {
 public:
  using Error::Error;
};

/**
 * Runs a type-correct pipeline. Report:
 *   {pipeline, steps: [{kind, name, encoding_in, encoding_out, width, depth,
 *    cnots}], result, queries, seed}
 * The extraction samples with `seed` itself; post-selecting converters draw
 * from derive_seed(seed, step index).
 */
nlohmann::json execute(const PipelineSpec& spec, std::uint64_t seed, const ExecOptions& opts = {});

}  // namespace enqode
