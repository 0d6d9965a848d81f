// enqode: circuits and resource metrics
// Copyright 2026 The enqode Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "enqode/sim/gate.hpp"

namespace enqode {

/// Named contiguous qubit range.
struct Register {
  std::string name;
  int start = 0;
  int size = 0;

  std::vector<int> qubits() const;
};

struct CircuitMetrics {
  int width = 0;
  int depth = 0;
  /// X gates with exactly one control.
  int cnot_count = 0;
  int query_count = 0;
  int gate_count = 0;
  /// Gates touching two or more qubits.
  int multi_qubit_count = 0;
};

class Circuit {
 public:
  explicit Circuit(int n_qubits);

  int n_qubits() const noexcept { return n_; }
  const std::vector<Gate>& gates() const noexcept { return gates_; }
  const std::vector<Register>& registers() const noexcept { return regs_; }
  bool empty() const noexcept { return gates_.empty(); }

  /// Appends a gate after validating its qubit indices.
  Circuit& add(Gate g);
  /// Appends all gates of `other`, which must not be wider than this.
  Circuit& append(const Circuit& other);
  /// Appends `other` with its qubit q relabelled to qubit_map[q].
  Circuit& append(const Circuit& other, const std::vector<int>& qubit_map);

  Circuit& add_register(std::string name, int start, int size);
  const Register* find_register(std::string_view name) const;
  const Register& reg(std::string_view name) const;

  /// Reversed sequence of inverted gates. Registers are kept.
  Circuit inverse() const;
  /// Every gate gains `control`, which must be a qubit the circuit never uses.
  Circuit controlled(int control) const;
  /// Same gates and registers on a wider qubit range.
  Circuit widened(int n_qubits) const;

  /// Width, ASAP depth and gate counts. Global phases without controls do not
  /// occupy a layer.
  CircuitMetrics metrics() const;

 private:
  void check_gate(const Gate& g) const;

  int n_;
  std::vector<Gate> gates_;
  std::vector<Register> regs_;
};

}  // namespace enqode
