// enqode: quantum-based Monte Carlo
// Copyright 2026 The enqode Authors.
// SPDX-License-Identifier: Apache-2.0
#include "enqode/qmc/qmc.hpp"

#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

#include "enqode/errors.hpp"
#include "enqode/extractors/extractors.hpp"
#include "enqode/loaders/loaders.hpp"
#include "enqode/sim/sampling.hpp"
#include "enqode/sim/simulator.hpp"

namespace enqode {

DiscreteDistribution DiscreteDistribution::on_indices(std::vector<double> probabilities) {
  DiscreteDistribution d;
  d.points.resize(probabilities.size());
  std::iota(d.points.begin(), d.points.end(), 0.0);
  d.probabilities = std::move(probabilities);
  d.check();
  return d;
}

DiscreteDistribution DiscreteDistribution::uniform(int m) {
  if (m < 1 || m > 20) throw SizeError("distribution qubits out of range");
  const std::size_t n = std::size_t{1} << m;
  return on_indices(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

DiscreteDistribution DiscreteDistribution::point_mass(int m, std::uint64_t x0) {
  if (m < 1 || m > 20) throw SizeError("distribution qubits out of range");
  std::vector<double> p(std::size_t{1} << m, 0.0);
  p.at(x0) = 1.0;
  return on_indices(std::move(p));
}

int DiscreteDistribution::qubits() const {
  int k = 0;
  while ((std::size_t{1} << k) < probabilities.size()) ++k;
  return k;
}

void DiscreteDistribution::check() const {
  const std::size_t n = probabilities.size();
  if (n < 2 || (n & (n - 1)) != 0)
    throw ShapeError("distribution needs 2^m >= 2 mass points, got " + std::to_string(n));
  if (points.size() != n) throw ShapeError("points and probabilities differ in length");
  double total = 0.0;
  for (double p : probabilities) {
    if (!(p >= 0.0)) throw EncodingDomainError("negative probability");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-12)
    throw EncodingDomainError("probabilities sum to " + std::to_string(total));
}

DiscreteDistribution distribution_from_json(const nlohmann::json& j) {
  if (j.is_array()) return DiscreteDistribution::on_indices(j.get<std::vector<double>>());
  if (!j.is_object() || !j.contains("probabilities"))
    throw ArgumentError("distribution JSON needs a \"probabilities\" array");
  DiscreteDistribution d;
  d.probabilities = j.at("probabilities").get<std::vector<double>>();
  if (j.contains("points")) {
    d.points = j.at("points").get<std::vector<double>>();
  } else {
    d.points.resize(d.probabilities.size());
    std::iota(d.points.begin(), d.points.end(), 0.0);
  }
  d.check();
  return d;
}

nlohmann::json to_json(const McReport& r) {
  nlohmann::json j{{"estimate", r.estimate},
                   {"truth", r.truth},
                   {"abs_error", r.abs_error},
                   {"method", r.method},
                   {"queries", r.queries},
                   {"circuit_depth", r.circuit_depth},
                   {"crossover_flags",
                    {{"epsilon_vs_2m", r.crossover_flags.epsilon_vs_2m},
                     {"cF_vs_cf_ratio", r.crossover_flags.cF_vs_cf_ratio}}}};
  if (r.method == "quantum") {
    j["error_bound"] = r.error_bound;
    j["bound_mass"] = r.bound_mass;
  }
  return j;
}

namespace {

void check_domains(const DiscreteDistribution& x, const FunctionTable& f) {
  x.check();
  if (!f.problems().empty()) throw EncodingDomainError("function table: " + f.problems().front());
  if (f.kind != FunctionKind::Amplitude)
    throw CompatibilityError("Monte Carlo needs an amplitude function with values in [0, 1]");
  if (f.values.size() != x.probabilities.size())
    throw CompatibilityError("function is defined on " + std::to_string(f.values.size()) +
                             " points but the distribution has " +
                             std::to_string(x.probabilities.size()));
}

}  // namespace

Circuit build_F(const DiscreteDistribution& x, const FunctionTable& f) {
  check_domains(x, f);
  const int n = x.qubits();
  std::vector<double> amps(x.probabilities.size());
  for (std::size_t i = 0; i < amps.size(); ++i) amps[i] = std::sqrt(x.probabilities[i]);
  Circuit c(n + 1);
  c.append(load_amplitude(std::span<const double>(amps)).circuit);
  c.append(amplitude_oracle(f));
  c.add_register("x", 0, n);
  c.add_register("flag", n, 1);
  return c;
}

double direct_sum(const DiscreteDistribution& x, const FunctionTable& f) {
  check_domains(x, f);
  double s = 0.0;
  for (std::size_t i = 0; i < f.values.size(); ++i) s += x.probabilities[i] * f.values[i];
  return s;
}

McReport qmc_expectation(const DiscreteDistribution& x, const FunctionTable& f, int m,
                         std::uint64_t shots, std::uint64_t seed) {
  const Circuit F = build_F(x, f);
  const int flag = x.qubits();
  const auto est = qae_estimate(F, flag, m, shots, seed);
  McReport r;
  r.method = "quantum";
  r.estimate = est.estimate;
  r.truth = direct_sum(x, f);
  r.abs_error = std::abs(r.estimate - r.truth);
  r.queries = est.oracle_queries;
  r.circuit_depth = F.metrics().depth;
  r.crossover_flags.epsilon_vs_2m = m <= x.qubits();
  r.crossover_flags.cF_vs_cf_ratio = r.circuit_depth;
  r.error_bound = qae_error_bound(r.truth, m);
  const auto dist = qae_distribution(F, flag, m);
  for (std::uint64_t y = 0; y < dist.size(); ++y)
    if (std::abs(qae_value(y, m) - r.truth) <= r.error_bound) r.bound_mass += dist[y];
  return r;
}

McReport classical_mc(const DiscreteDistribution& x, const FunctionTable& f, std::uint64_t samples,
                      std::uint64_t seed) {
  check_domains(x, f);
  if (samples == 0) throw ArgumentError("classical Monte Carlo needs at least one sample");
  double sum = 0.0;
  for (auto i : sample_distribution(x.probabilities, samples, seed)) sum += f.values[i];
  McReport r;
  r.method = "classical";
  r.estimate = sum / static_cast<double>(samples);
  r.truth = direct_sum(x, f);
  r.abs_error = std::abs(r.estimate - r.truth);
  r.queries = samples;
  r.crossover_flags.cF_vs_cf_ratio = 1.0;
  return r;
}

std::vector<ComplexityRow> complexity_report(const DiscreteDistribution& x, const FunctionTable& f,
                                             const std::vector<double>& epsilon_grid) {
  const Circuit F = build_F(x, f);
  const int depth = F.metrics().depth;
  const double mean = direct_sum(x, f);
  double var = 0.0;
  for (std::size_t i = 0; i < f.values.size(); ++i)
    var += x.probabilities[i] * (f.values[i] - mean) * (f.values[i] - mean);
  const double z = normal_quantile(0.975);
  const std::uint64_t direct = std::uint64_t{1} << x.qubits();

  std::vector<ComplexityRow> rows;
  for (double eps : epsilon_grid) {
    if (!(eps > 0.0 && eps < 1.0)) throw ArgumentError("epsilon must lie in (0, 1)");
    ComplexityRow r;
    r.epsilon = eps;
    r.qae_m = std::max(1, static_cast<int>(std::ceil(std::log2(1.0 / eps) - 1e-12)));
    r.qae_queries = qae_queries_per_shot(r.qae_m);
    r.mc_samples = std::max<std::uint64_t>(
        1, static_cast<std::uint64_t>(std::ceil(z * z * var / (eps * eps) - 1e-9)));
    r.direct_cost = direct;
    r.depth_F = depth;
    r.depth_vs_2m = static_cast<double>(depth) / static_cast<double>(direct);
    r.epsilon_vs_2m = 1.0 / eps <= static_cast<double>(direct);
    r.direct_sum_cheaper = r.qae_queries * static_cast<std::uint64_t>(depth) >= direct;
    rows.push_back(r);
  }
  return rows;
}

nlohmann::json to_json(const ComplexityRow& r) {
  return {{"epsilon", r.epsilon},         {"qae_m", r.qae_m},
          {"qae_queries", r.qae_queries}, {"mc_samples", r.mc_samples},
          {"direct_cost", r.direct_cost}, {"depth_F", r.depth_F},
          {"depth_vs_2m", r.depth_vs_2m}, {"epsilon_vs_2m", r.epsilon_vs_2m},
          {"direct_sum_cheaper", r.direct_sum_cheaper}};
}

std::string complexity_csv(const std::vector<ComplexityRow>& rows) {
  std::ostringstream out;
  out << "epsilon,qae_m,qae_queries,mc_samples,direct_cost,depth_F,depth_vs_2m,epsilon_vs_2m,"
         "direct_sum_cheaper\n";
  for (const auto& r : rows)
    out << r.epsilon << ',' << r.qae_m << ',' << r.qae_queries << ',' << r.mc_samples << ','
        << r.direct_cost << ',' << r.depth_F << ',' << r.depth_vs_2m << ','
        << (r.epsilon_vs_2m ? 1 : 0) << ',' << (r.direct_sum_cheaper ? 1 : 0) << '\n';
  return out.str();
}

McReport qmc_with_mapping(const DiscreteDistribution& x,
                          const std::function<std::uint64_t(double)>& g,
                          const std::function<double(double)>& f, const FunctionTable& table,
                          int m, std::uint64_t shots, std::uint64_t seed) {
  x.check();
  const std::size_t n_points = x.points.size();
  std::vector<double> reordered(n_points, 0.0);
  std::set<std::uint64_t> seen;
  for (std::size_t i = 0; i < n_points; ++i) {
    const std::uint64_t k = g(x.points[i]);
    if (k >= n_points || !seen.insert(k).second)
      throw CompatibilityError("g is not a bijection onto the basis indices");
    reordered[k] = x.probabilities[i];
  }
  const Circuit rf = amplitude_oracle(table);
  if (rf.n_qubits() - 1 != x.qubits())
    throw CompatibilityError("function table size does not match the distribution");
  // R_f |g(x)>|0> must put f(x) on the flag.
  for (std::size_t i = 0; i < n_points; ++i) {
    const std::uint64_t k = g(x.points[i]);
    const auto s = apply_circuit(StateVector::basis(rf.n_qubits(), k), rf);
    const double got = std::norm(s[k | (std::uint64_t{1} << x.qubits())]);
    const double want = f(x.points[i]);
    if (std::abs(got - want) > 1e-10) {
      std::ostringstream msg;
      msg << "R_f is not compatible with g at basis state |" << k << "> (x = " << x.points[i]
          << "): f(x) = " << want << " but the oracle gives " << got;
      throw CompatibilityError(msg.str());
    }
  }
  auto mapped = DiscreteDistribution::on_indices(std::move(reordered));
  McReport r = qmc_expectation(mapped, table, m, shots, seed);
  double truth = 0.0;
  for (std::size_t i = 0; i < n_points; ++i) truth += x.probabilities[i] * f(x.points[i]);
  r.truth = truth;
  r.abs_error = std::abs(r.estimate - truth);
  return r;
}

}  // namespace enqode
