// enqode: state-vector evolution
// Copyright 2026 The enqode Authors.
// SPDX-License-Identifier: Apache-2.0
#include "enqode/sim/simulator.hpp"

#include <cmath>
#include <string>

#include "enqode/errors.hpp"

namespace enqode {

namespace {

std::uint64_t mask_of(const std::vector<int>& qubits) {
  std::uint64_t m = 0;
  for (int q : qubits) m |= 1ULL << q;
  return m;
}

// Applies the 2x2 matrix [[u00, u01], [u10, u11]] on `target` wherever all
// control bits are set.
void apply_2x2(std::vector<cplx>& a, int target, std::uint64_t cmask, cplx u00,
               cplx u01, cplx u10, cplx u11) {
  const std::uint64_t t = 1ULL << target;
  for (std::uint64_t i = 0; i < a.size(); ++i) {
    if ((i & t) || (i & cmask) != cmask) continue;
    const cplx a0 = a[i], a1 = a[i | t];
    a[i] = u00 * a0 + u01 * a1;
    a[i | t] = u10 * a0 + u11 * a1;
  }
}

}  // namespace

void apply_gate(StateVector& s, const Gate& g) {
  auto& a = s.data();
  const std::uint64_t cmask = mask_of(g.controls);
  switch (g.kind) {
    case GateKind::X: {
      const std::uint64_t t = 1ULL << g.targets[0];
      for (std::uint64_t i = 0; i < a.size(); ++i)
        if (!(i & t) && (i & cmask) == cmask) std::swap(a[i], a[i | t]);
      break;
    }
    case GateKind::H: {
      const double r = 1.0 / std::sqrt(2.0);
      apply_2x2(a, g.targets[0], cmask, r, r, r, -r);
      break;
    }
    case GateKind::RY: {
      const double c = std::cos(g.angle / 2), sn = std::sin(g.angle / 2);
      apply_2x2(a, g.targets[0], cmask, c, -sn, sn, c);
      break;
    }
    case GateKind::RZ: {
      const cplx e0 = std::polar(1.0, -g.angle / 2), e1 = std::polar(1.0, g.angle / 2);
      const std::uint64_t t = 1ULL << g.targets[0];
      for (std::uint64_t i = 0; i < a.size(); ++i)
        if ((i & cmask) == cmask) a[i] *= (i & t) ? e1 : e0;
      break;
    }
    case GateKind::P: {
      const cplx e1 = std::polar(1.0, g.angle);
      const std::uint64_t t = 1ULL << g.targets[0];
      const std::uint64_t need = cmask | t;
      for (std::uint64_t i = 0; i < a.size(); ++i)
        if ((i & need) == need) a[i] *= e1;
      break;
    }
    case GateKind::Swap: {
      const std::uint64_t ba = 1ULL << g.targets[0], bb = 1ULL << g.targets[1];
      for (std::uint64_t i = 0; i < a.size(); ++i)
        if ((i & ba) && !(i & bb) && (i & cmask) == cmask) std::swap(a[i], a[i ^ ba ^ bb]);
      break;
    }
    case GateKind::MultiplexedRY: {
      const std::uint64_t t = 1ULL << g.targets[0];
      std::vector<double> c(g.angles.size()), sn(g.angles.size());
      for (std::size_t k = 0; k < g.angles.size(); ++k) {
        c[k] = std::cos(g.angles[k] / 2);
        sn[k] = std::sin(g.angles[k] / 2);
      }
      for (std::uint64_t i = 0; i < a.size(); ++i) {
        if ((i & t) || (i & cmask) != cmask) continue;
        const auto k = gather_bits(i, g.selectors);
        const cplx a0 = a[i], a1 = a[i | t];
        a[i] = c[k] * a0 - sn[k] * a1;
        a[i | t] = sn[k] * a0 + c[k] * a1;
      }
      break;
    }
    case GateKind::Permutation: {
      std::vector<cplx> out(a.size());
      const auto& table = *g.table;
      for (std::uint64_t i = 0; i < a.size(); ++i) {
        if ((i & cmask) != cmask) {
          out[i] = a[i];
          continue;
        }
        out[scatter_bits(i, table[gather_bits(i, g.targets)], g.targets)] = a[i];
      }
      a.swap(out);
      break;
    }
    case GateKind::GlobalPhase: {
      const cplx e = std::polar(1.0, g.angle);
      for (std::uint64_t i = 0; i < a.size(); ++i)
        if ((i & cmask) == cmask) a[i] *= e;
      break;
    }
  }
}

StateVector apply_circuit(StateVector s, const Circuit& c) {
  if (s.n_qubits() != c.n_qubits())
    throw ShapeError("circuit on " + std::to_string(c.n_qubits()) +
                     " qubits applied to a state on " + std::to_string(s.n_qubits()));
  for (const auto& g : c.gates()) apply_gate(s, g);
  return s;
}

StateVector simulate(const Circuit& c) {
  if (c.n_qubits() > kMaxQubits)
    throw CapacityError("circuit width " + std::to_string(c.n_qubits()) +
                        " exceeds the " + std::to_string(kMaxQubits) + "-qubit simulator");
  return apply_circuit(StateVector::zero(c.n_qubits()), c);
}

std::vector<std::vector<cplx>> circuit_matrix(const Circuit& c) {
  const std::size_t d = std::size_t{1} << c.n_qubits();
  std::vector<std::vector<cplx>> cols;
  cols.reserve(d);
  for (std::size_t j = 0; j < d; ++j)
    cols.push_back(apply_circuit(StateVector::basis(c.n_qubits(), j), c).amplitudes());
  return cols;
}

std::vector<std::vector<cplx>> gate_matrix(const Gate& g, int n_qubits) {
  Circuit c(n_qubits);
  c.add(g);
  return circuit_matrix(c);
}

}  // namespace enqode
