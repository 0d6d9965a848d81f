// enqode: gate definitions
// Copyright 2026 The enqode Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace enqode {

enum class GateKind {
  X,
  H,
  RY,
  RZ,
  P,
  Swap,
  MultiplexedRY,
  Permutation,
  GlobalPhase,
};

std::string to_string(GateKind kind);

/**
 * One gate. Every kind accepts an arbitrary set of (positive) controls, so
 * CNOT is X with one control, controlled-P is P with one control and so on.
 *
 * RY(t) = [[cos t/2, -sin t/2], [sin t/2, cos t/2]],
 * RZ(t) = diag(e^{-it/2}, e^{it/2}), P(t) = diag(1, e^{it}).
 *
 * MultiplexedRY applies RY(angles[c]) to the target where c is the value of
 * the selector qubits (selectors[0] low bit). Permutation maps the value v of
 * the target qubits (targets[0] low bit) to table[v]. GlobalPhase multiplies
 * by e^{i angle}; with controls it is a phase on the all-ones control state.
 */
struct Gate {
  GateKind kind = GateKind::X;
  std::vector<int> targets;
  std::vector<int> controls;
  std::vector<int> selectors;
  double angle = 0.0;
  std::vector<double> angles;
  std::shared_ptr<const std::vector<std::uint64_t>> table;
  /// Counts as one oracle query in circuit metrics.
  bool query = false;

  static Gate x(int target);
  static Gate h(int target);
  static Gate ry(int target, double theta);
  static Gate rz(int target, double theta);
  static Gate p(int target, double theta);
  static Gate cnot(int control, int target);
  static Gate cp(int control, int target, double theta);
  static Gate cry(int control, int target, double theta);
  static Gate swap(int a, int b);
  static Gate cswap(int control, int a, int b);
  static Gate multiplexed_ry(int target, std::vector<int> selectors,
                             std::vector<double> angles);
  static Gate permutation(std::vector<int> targets,
                          std::vector<std::uint64_t> table);
  static Gate global_phase(double phi);

  Gate controlled_by(int control) const;
  Gate controlled_by(const std::vector<int>& extra) const;
  Gate inverse() const;

  /// Every qubit the gate reads or writes.
  std::vector<int> qubits() const;

  /// Only permutes basis states (X, Swap, Permutation).
  bool is_classical() const;
  /// Diagonal in the computational basis (RZ, P, GlobalPhase).
  bool is_diagonal() const;
};

}  // namespace enqode
