// enqode: gate definitions
// Copyright 2026 The enqode Authors.
// SPDX-License-Identifier: Apache-2.0
#include "enqode/sim/gate.hpp"

#include <algorithm>

#include "enqode/errors.hpp"

namespace enqode {

std::string to_string(GateKind kind) {
  switch (kind) {
    case GateKind::X: return "x";
    case GateKind::H: return "h";
    case GateKind::RY: return "ry";
    case GateKind::RZ: return "rz";
    case GateKind::P: return "p";
    case GateKind::Swap: return "swap";
    case GateKind::MultiplexedRY: return "multiplexed_ry";
    case GateKind::Permutation: return "permutation";
    case GateKind::GlobalPhase: return "global_phase";
  }
  return "unknown";
}

namespace {

Gate single(GateKind kind, int target, double angle = 0.0) {
  Gate g;
  g.kind = kind;
  g.targets = {target};
  g.angle = angle;
  return g;
}

}  // namespace

Gate Gate::x(int target) { return single(GateKind::X, target); }
Gate Gate::h(int target) { return single(GateKind::H, target); }
Gate Gate::ry(int target, double theta) { return single(GateKind::RY, target, theta); }
Gate Gate::rz(int target, double theta) { return single(GateKind::RZ, target, theta); }
Gate Gate::p(int target, double theta) { return single(GateKind::P, target, theta); }

Gate Gate::cnot(int control, int target) { return x(target).controlled_by(control); }

Gate Gate::cp(int control, int target, double theta) {
  return p(target, theta).controlled_by(control);
}

Gate Gate::cry(int control, int target, double theta) {
  return ry(target, theta).controlled_by(control);
}

Gate Gate::swap(int a, int b) {
  Gate g;
  g.kind = GateKind::Swap;
  g.targets = {a, b};
  return g;
}

Gate Gate::cswap(int control, int a, int b) { return swap(a, b).controlled_by(control); }

Gate Gate::multiplexed_ry(int target, std::vector<int> selectors,
                          std::vector<double> angles) {
  if (angles.size() != (std::size_t{1} << selectors.size()))
    throw ArgumentError("multiplexed RY needs 2^k angles for k selectors");
  Gate g;
  g.kind = GateKind::MultiplexedRY;
  g.targets = {target};
  g.selectors = std::move(selectors);
  g.angles = std::move(angles);
  return g;
}

Gate Gate::permutation(std::vector<int> targets, std::vector<std::uint64_t> table) {
  if (table.size() != (std::size_t{1} << targets.size()))
    throw ArgumentError("permutation table size must be 2^targets");
  std::vector<char> seen(table.size(), 0);
  for (auto v : table) {
    if (v >= table.size() || seen[v])
      throw ArgumentError("permutation table is not a bijection");
    seen[v] = 1;
  }
  Gate g;
  g.kind = GateKind::Permutation;
  g.targets = std::move(targets);
  g.table = std::make_shared<const std::vector<std::uint64_t>>(std::move(table));
  return g;
}

Gate Gate::global_phase(double phi) {
  Gate g;
  g.kind = GateKind::GlobalPhase;
  g.angle = phi;
  return g;
}

Gate Gate::controlled_by(int control) const {
  Gate g = *this;
  g.controls.push_back(control);
  return g;
}

Gate Gate::controlled_by(const std::vector<int>& extra) const {
  Gate g = *this;
  g.controls.insert(g.controls.end(), extra.begin(), extra.end());
  return g;
}

Gate Gate::inverse() const {
  Gate g = *this;
  switch (kind) {
    case GateKind::X:
    case GateKind::H:
    case GateKind::Swap:
      break;
    case GateKind::RY:
    case GateKind::RZ:
    case GateKind::P:
    case GateKind::GlobalPhase:
      g.angle = -angle;
      break;
    case GateKind::MultiplexedRY:
      for (auto& a : g.angles) a = -a;
      break;
    case GateKind::Permutation: {
      std::vector<std::uint64_t> inv(table->size());
      for (std::size_t v = 0; v < table->size(); ++v) inv[(*table)[v]] = v;
      g.table = std::make_shared<const std::vector<std::uint64_t>>(std::move(inv));
      break;
    }
  }
  return g;
}

std::vector<int> Gate::qubits() const {
  std::vector<int> q = targets;
  q.insert(q.end(), controls.begin(), controls.end());
  q.insert(q.end(), selectors.begin(), selectors.end());
  return q;
}

bool Gate::is_classical() const {
  return kind == GateKind::X || kind == GateKind::Swap || kind == GateKind::Permutation;
}

bool Gate::is_diagonal() const {
  return kind == GateKind::RZ || kind == GateKind::P || kind == GateKind::GlobalPhase;
}

}  // namespace enqode
