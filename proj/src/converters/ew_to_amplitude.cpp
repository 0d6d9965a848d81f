// enqode: equally-weighted to amplitude conversion
// Copyright 2026 The enqode Authors.
// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cmath>
#include <numeric>

#include "enqode/converters/converters.hpp"
#include "enqode/errors.hpp"
#include "enqode/loaders/loaders.hpp"
#include "enqode/loaders/multiplexor.hpp"
#include "enqode/sim/rng.hpp"
#include "enqode/sim/simulator.hpp"

namespace enqode {

Circuit DigitLoader::circuit() const {
  Circuit c(width());
  c.append(index_prep);
  c.append(oracle);
  c.add_register("index", 0, index_qubits);
  c.add_register("digits", index_qubits, digit_qubits);
  return c;
}

DigitLoader make_digit_loader(std::span<const double> digits, int m) {
  if (m < 1 || m > 10) throw SizeError("digit count must be in [1, 10]");
  if (digits.empty()) throw ArgumentError("digit set is empty");
  int n = 1;
  while ((std::size_t{1} << n) < digits.size()) ++n;
  const double scale = std::ldexp(1.0, m);
  std::vector<std::uint64_t> codes(std::size_t{1} << n, 0);
  for (std::size_t i = 0; i < digits.size(); ++i) {
    const double v = digits[i] * scale;
    if (!(digits[i] >= 0.0 && digits[i] <= 1.0) || std::abs(v - std::round(v)) > 1e-9)
      throw EncodingDomainError("digit value " + std::to_string(digits[i]) +
                                " is not an " + std::to_string(m) + "-bit binary fraction in [0, 1]");
    codes[i] = static_cast<std::uint64_t>(std::llround(v));
  }
  std::vector<std::uint64_t> idx(digits.size());
  std::iota(idx.begin(), idx.end(), 0);

  DigitLoader out;
  out.index_qubits = n;
  out.digit_qubits = m + 1;
  out.index_prep = load_equally_weighted(idx, n).circuit.widened(n + m + 1);
  out.oracle = qram_oracle(codes, m + 1);
  return out;
}

EwToAmplitudeResult convert_ew_to_amplitude(const DigitLoader& u_d, std::uint64_t seed) {
  const int n = u_d.index_qubits, w = u_d.width();
  const int m = u_d.digit_qubits - 1;
  if (w + 1 > kMaxQubits) throw CapacityError("converter circuit exceeds the simulator cap");
  const Circuit ud = u_d.circuit();

  Circuit c(w + 1);
  c.append(ud);
  std::vector<int> sel(u_d.digit_qubits);
  std::iota(sel.begin(), sel.end(), n);
  std::vector<double> angles(std::size_t{1} << u_d.digit_qubits);
  for (std::size_t j = 0; j < angles.size(); ++j)
    angles[j] = 2.0 * std::asin(std::min(1.0, std::ldexp(static_cast<double>(j), -m)));
  append_multiplexed_ry(c, w, sel, angles);
  c.append(ud.inverse());
  c.append(u_d.index_prep);
  c.add_register("index", 0, n);
  c.add_register("digits", n, u_d.digit_qubits);
  c.add_register("ancilla", w, 1);

  StateVector s = simulate(c);
  const std::uint64_t flag = std::uint64_t{1} << w;
  double p1 = 0.0;
  for (std::uint64_t i = 0; i < s.dimension(); ++i)
    if (i & flag) p1 += std::norm(s[i]);

  EwToAmplitudeResult r{s, false, p1, std::nullopt, c};
  Rng rng(seed);
  r.success = rng.bernoulli(p1);
  const double keep = r.success ? p1 : 1.0 - p1;
  auto& amps = r.state.data();
  for (std::uint64_t i = 0; i < s.dimension(); ++i) {
    const bool on = (i & flag) != 0;
    amps[i] = (on == r.success && keep > 0) ? amps[i] / std::sqrt(keep) : cplx(0.0);
  }
  if (r.success) {
    std::vector<cplx> data(std::size_t{1} << n);
    for (std::size_t i = 0; i < data.size(); ++i) data[i] = amps[flag | i];
    r.data = StateVector::from_amplitudes(std::move(data));
  }
  return r;
}

double ew_to_amplitude_success_frequency(const DigitLoader& u_d, std::uint64_t trials,
                                         std::uint64_t seed) {
  if (trials == 0) throw ArgumentError("trials must be positive");
  const double p = convert_ew_to_amplitude(u_d, seed).success_probability;
  std::uint64_t hits = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    Rng rng(derive_seed(seed, t));
    if (rng.bernoulli(p)) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(trials);
}

}  // namespace enqode
