// enqode: circuits and resource metrics
// Copyright 2026 The enqode Authors.
// SPDX-License-Identifier: Apache-2.0
#include "enqode/sim/circuit.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "enqode/errors.hpp"

namespace enqode {

std::vector<int> Register::qubits() const {
  std::vector<int> q(size);
  std::iota(q.begin(), q.end(), start);
  return q;
}

Circuit::Circuit(int n_qubits) : n_(n_qubits) {
  if (n_qubits < 1) throw SizeError("circuit needs at least one qubit");
}

void Circuit::check_gate(const Gate& g) const {
  auto q = g.qubits();
  for (int i : q)
    if (i < 0 || i >= n_)
      throw ArgumentError(to_string(g.kind) + " gate uses qubit " + std::to_string(i) +
                          " on a " + std::to_string(n_) + "-qubit circuit");
  std::sort(q.begin(), q.end());
  if (std::adjacent_find(q.begin(), q.end()) != q.end())
    throw ArgumentError(to_string(g.kind) + " gate uses a qubit twice");
  if (g.kind != GateKind::GlobalPhase && g.targets.empty())
    throw ArgumentError(to_string(g.kind) + " gate has no target");
}

Circuit& Circuit::add(Gate g) {
  check_gate(g);
  gates_.push_back(std::move(g));
  return *this;
}

Circuit& Circuit::append(const Circuit& other) {
  if (other.n_ > n_) throw ShapeError("appended circuit is wider than the host");
  gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
  return *this;
}

Circuit& Circuit::append(const Circuit& other, const std::vector<int>& qubit_map) {
  if (qubit_map.size() != static_cast<std::size_t>(other.n_))
    throw ShapeError("qubit map size does not match the appended circuit");
  auto remap = [&](std::vector<int>& v) {
    for (int& q : v) q = qubit_map[q];
  };
  for (Gate g : other.gates_) {
    remap(g.targets);
    remap(g.controls);
    remap(g.selectors);
    add(std::move(g));
  }
  return *this;
}

Circuit& Circuit::add_register(std::string name, int start, int size) {
  if (start < 0 || size < 0 || start + size > n_)
    throw ArgumentError("register '" + name + "' outside the circuit");
  for (const auto& r : regs_) {
    if (r.name == name) throw ArgumentError("duplicate register '" + name + "'");
    if (start < r.start + r.size && r.start < start + size)
      throw ArgumentError("register '" + name + "' overlaps '" + r.name + "'");
  }
  regs_.push_back({std::move(name), start, size});
  return *this;
}

const Register* Circuit::find_register(std::string_view name) const {
  for (const auto& r : regs_)
    if (r.name == name) return &r;
  return nullptr;
}

const Register& Circuit::reg(std::string_view name) const {
  const Register* r = find_register(name);
  if (!r) throw ArgumentError("no register named '" + std::string(name) + "'");
  return *r;
}

Circuit Circuit::inverse() const {
  Circuit c(n_);
  c.regs_ = regs_;
  c.gates_.reserve(gates_.size());
  for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) c.gates_.push_back(it->inverse());
  return c;
}

Circuit Circuit::controlled(int control) const {
  Circuit c(n_);
  c.regs_ = regs_;
  c.gates_.reserve(gates_.size());
  for (const auto& g : gates_) c.add(g.controlled_by(control));
  return c;
}

Circuit Circuit::widened(int n_qubits) const {
  if (n_qubits < n_) throw ShapeError("cannot narrow a circuit");
  Circuit c(n_qubits);
  c.regs_ = regs_;
  c.gates_ = gates_;
  return c;
}

CircuitMetrics Circuit::metrics() const {
  CircuitMetrics m;
  m.width = n_;
  std::vector<int> level(n_, 0);
  for (const auto& g : gates_) {
    ++m.gate_count;
    if (g.query) ++m.query_count;
    if (g.kind == GateKind::X && g.controls.size() == 1) ++m.cnot_count;
    const auto q = g.qubits();
    if (q.size() >= 2) ++m.multi_qubit_count;
    if (q.empty()) continue;
    int l = 0;
    for (int i : q) l = std::max(l, level[i]);
    ++l;
    for (int i : q) level[i] = l;
    m.depth = std::max(m.depth, l);
  }
  return m;
}

}  // namespace enqode
