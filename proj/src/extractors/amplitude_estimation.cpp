// enqode: canonical quantum amplitude estimation
// Copyright 2026 The enqode Authors.
// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>

#include "enqode/converters/converters.hpp"
#include "enqode/errors.hpp"
#include "enqode/extractors/extractors.hpp"
#include "enqode/sim/sampling.hpp"
#include "enqode/sim/simulator.hpp"

namespace enqode {

Circuit grover_operator(const Circuit& f, int flag_qubit) {
  const int w = f.n_qubits();
  if (flag_qubit < 0 || flag_qubit >= w) throw ArgumentError("flag qubit outside the circuit");
  Circuit q(w);
  q.add(Gate::p(flag_qubit, std::numbers::pi));
  q.append(f.inverse());
  for (int k = 0; k < w; ++k) q.add(Gate::x(k));
  std::vector<int> ctl(w - 1);
  std::iota(ctl.begin(), ctl.end(), 0);
  q.add(Gate::p(w - 1, std::numbers::pi).controlled_by(ctl));
  for (int k = 0; k < w; ++k) q.add(Gate::x(k));
  q.add(Gate::global_phase(std::numbers::pi));
  q.append(f);
  return q;
}

Circuit qae_circuit(const Circuit& f, int flag_qubit, int m) {
  const int w = f.n_qubits();
  if (m < 1) throw SizeError("QAE needs at least one precision qubit");
  if (w + m > kMaxQubits) throw CapacityError("QAE circuit exceeds the simulator cap");
  Circuit c(w + m);
  c.append(f);
  for (int j = 0; j < m; ++j) c.add(Gate::h(w + j));
  const Circuit q = grover_operator(f, flag_qubit).widened(w + m);
  for (int j = 0; j < m; ++j) {
    const Circuit cq = q.controlled(w + j);
    for (std::uint64_t r = 0; r < (std::uint64_t{1} << j); ++r) c.append(cq);
  }
  std::vector<int> prec(m);
  std::iota(prec.begin(), prec.end(), w);
  c.append(inverse_qft_circuit(m), prec);
  c.add_register("state", 0, w);
  c.add_register("precision", w, m);
  return c;
}

std::vector<double> qae_distribution(const Circuit& f, int flag_qubit, int m) {
  const Circuit c = qae_circuit(f, flag_qubit, m);
  const auto prec = c.reg("precision").qubits();
  return marginal_probabilities(simulate(c), prec);
}

double qae_value(std::uint64_t y, int m) {
  const double s = std::sin(std::numbers::pi * std::ldexp(static_cast<double>(y), -m));
  return s * s;
}

double qae_error_bound(double mu, int m) {
  const double step = std::ldexp(1.0, -m);
  return 2.0 * std::numbers::pi * std::sqrt(mu * (1.0 - mu)) * step +
         std::numbers::pi * std::numbers::pi * step * step;
}

std::uint64_t qae_queries_per_shot(int m) { return 2 * ((std::uint64_t{1} << m) - 1) + 1; }

EstimateResult qae_estimate(const Circuit& f, int flag_qubit, int m, std::uint64_t shots,
                            std::uint64_t seed) {
  if (shots == 0) throw ArgumentError("QAE needs at least one shot");
  const auto dist = qae_distribution(f, flag_qubit, m);
  // y and 2^m - y give the same estimate; count them together.
  std::map<std::uint64_t, std::uint64_t> counts;
  const std::uint64_t M = std::uint64_t{1} << m;
  for (auto y : sample_distribution(dist, shots, seed)) ++counts[std::min(y, M - y)];
  std::uint64_t best = 0, best_k = 0;
  for (const auto& [k, n] : counts)
    if (n > best) {
      best = n;
      best_k = k;
    }
  EstimateResult r;
  r.method = "qae";
  r.estimate = qae_value(best_k, m);
  r.error_target = qae_error_bound(r.estimate, m);
  r.confidence = 8.0 / (std::numbers::pi * std::numbers::pi);
  r.shots_used = shots;
  r.oracle_queries = shots * qae_queries_per_shot(m);
  return r;
}

}  // namespace enqode
