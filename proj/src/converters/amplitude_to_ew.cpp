// enqode: amplitude to equally-weighted conversion
// Copyright 2026 The enqode Authors.
// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <numbers>
#include <numeric>

#include "enqode/converters/converters.hpp"
#include "enqode/errors.hpp"

namespace enqode {

namespace {

std::vector<int> range(int start, int size) {
  std::vector<int> v(size);
  std::iota(v.begin(), v.end(), start);
  return v;
}

// I - 2|0><0| on qs.
void reflect_zero(Circuit& c, const std::vector<int>& qs) {
  for (int q : qs) c.add(Gate::x(q));
  std::vector<int> ctl(qs.begin(), qs.end() - 1);
  c.add(Gate::p(qs.back(), std::numbers::pi).controlled_by(ctl));
  for (int q : qs) c.add(Gate::x(q));
}

}  // namespace

std::uint64_t amplitude_to_digit(double d, int m) {
  if (!(d >= 0.0 && d <= 1.0)) throw EncodingDomainError("amplitude outside [0, 1]");
  return static_cast<std::uint64_t>(std::llround(std::ldexp(std::asin(d) / std::numbers::pi, m)));
}

double digit_to_amplitude(std::uint64_t k, int m) {
  return std::sin(std::numbers::pi * std::ldexp(static_cast<double>(k), -m));
}

AmplitudeToEw convert_amplitude_to_ew(const Circuit& u_a, int m) {
  const int n = u_a.n_qubits();
  if (m < 1) throw SizeError("digit count must be positive");
  if (n + m > 12) throw CapacityError("index qubits + digits must not exceed 12");
  const int w = 2 * n + 2 * m;
  const auto index = range(0, n), work = range(n, n), phase = range(2 * n, m),
             digits = range(2 * n + m, m);

  // G = -U_A S_0 U_A^dagger S_i, with S_i flipping the sign where work == index.
  // Without the -1 the rotation angle would be pi/2 - theta_i.
  Circuit g(w);
  for (int j = 0; j < n; ++j) g.add(Gate::cnot(index[j], work[j]));
  reflect_zero(g, work);
  for (int j = 0; j < n; ++j) g.add(Gate::cnot(index[j], work[j]));
  g.append(u_a.inverse(), work);
  reflect_zero(g, work);
  g.append(u_a, work);
  g.add(Gate::global_phase(std::numbers::pi));

  Circuit estimate(w);
  for (int q : phase) estimate.add(Gate::h(q));
  for (int j = 0; j < m; ++j) {
    const Circuit cg = g.controlled(phase[j]);
    for (std::uint64_t r = 0; r < (std::uint64_t{1} << j); ++r) estimate.append(cg);
  }
  estimate.append(inverse_qft_circuit(m), phase);

  // digits ^= min(y, 2^m - y)
  const std::uint64_t M = std::uint64_t{1} << m;
  std::vector<std::uint64_t> table(M * M);
  for (std::uint64_t v = 0; v < table.size(); ++v) {
    const std::uint64_t y = v & (M - 1), z = v >> m;
    const std::uint64_t k = y <= M / 2 ? y : M - y;
    table[v] = y | ((z ^ k) << m);
  }
  std::vector<int> fold_qubits = phase;
  fold_qubits.insert(fold_qubits.end(), digits.begin(), digits.end());

  AmplitudeToEw out;
  out.circuit = Circuit(w);
  Circuit& c = out.circuit;
  for (int q : index) c.add(Gate::h(q));
  c.append(u_a, work);
  c.append(estimate);
  c.add(Gate::permutation(fold_qubits, std::move(table)));
  c.append(estimate.inverse());
  c.append(u_a.inverse(), work);
  c.add_register("index", 0, n);
  c.add_register("work", n, n);
  c.add_register("phase", 2 * n, m);
  c.add_register("digits", 2 * n + m, m);
  out.index_qubits = n;
  out.m = m;
  out.index_register = index;
  out.digit_register = digits;
  return out;
}

double ew_fidelity(const StateVector& s, const AmplitudeToEw& conv,
                   std::span<const std::uint64_t> digits) {
  const std::uint64_t N = std::uint64_t{1} << conv.index_qubits;
  if (digits.size() != N) throw ShapeError("one digit value per index expected");
  std::uint64_t keep_mask = 0;
  for (int q : conv.index_register) keep_mask |= std::uint64_t{1} << q;
  for (int q : conv.digit_register) keep_mask |= std::uint64_t{1} << q;
  std::vector<cplx> acc(s.dimension(), 0.0);
  const double w = 1.0 / std::sqrt(static_cast<double>(N));
  for (std::uint64_t v = 0; v < s.dimension(); ++v) {
    const std::uint64_t i = gather_bits(v, conv.index_register);
    if (gather_bits(v, conv.digit_register) == digits[i]) acc[v & ~keep_mask] += w * s[v];
  }
  double f = 0.0;
  for (const auto& a : acc) f += std::norm(a);
  return f;
}

std::vector<std::vector<double>> ew_digit_distribution(const StateVector& s,
                                                      const AmplitudeToEw& conv) {
  const std::uint64_t N = std::uint64_t{1} << conv.index_qubits;
  std::vector<std::vector<double>> out(N, std::vector<double>(std::size_t{1} << conv.m, 0.0));
  for (std::uint64_t v = 0; v < s.dimension(); ++v)
    out[gather_bits(v, conv.index_register)][gather_bits(v, conv.digit_register)] += std::norm(s[v]);
  for (auto& row : out) {
    double total = 0.0;
    for (double p : row) total += p;
    if (total > 0)
      for (double& p : row) p /= total;
  }
  return out;
}

}  // namespace enqode
