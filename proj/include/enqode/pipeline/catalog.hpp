// enqode: step signature table
// Copyright 2026 The enqode Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "enqode/pipeline/spec.hpp"

namespace enqode {

struct StepSignature {
  StepKind kind = StepKind::Convert;
  std::string name;
  /// Accepted input families; subtypes of a listed family are accepted too.
  std::vector<std::string> accepts;
  /// Output family, or the result type for extraction steps.
  std::string produces;
  std::vector<std::string> params;
  /// Needs a unitary preparation of its input (rejects post-selected states).
  bool needs_unitary = false;
  /// Output is obtained by post-selection.
  bool heralded = false;
  /// Explanation attached to type errors for this step.
  std::string reject_note;
  std::string resources;
};

struct SubtypeEdge {
  std::string sub;
  std::string super;
};

/// Families that `load` can produce, with their accepted parameters.
struct LoadSignature {
  std::string family;
  std::vector<std::string> params;
};

const std::vector<StepSignature>& step_catalog();
const std::vector<LoadSignature>& load_catalog();
const std::vector<SubtypeEdge>& subtype_edges();

const StepSignature* find_step(StepKind kind, const std::string& name);
const LoadSignature* find_load(const std::string& family);

/// Reflexive-transitive closure of the subtype edges.
bool is_subtype(const std::string& sub, const std::string& super);
bool accepts(const StepSignature& sig, const std::string& family);

/// Every family a program can hold: the loadable ones plus step outputs.
std::vector<std::string> all_families();

/// Ill-typed (family, step) edges of the table, for reporting and tests.
struct Mismatch {
  std::string family;
  const StepSignature* step;
};
std::vector<Mismatch> declared_mismatches();

}  // namespace enqode
