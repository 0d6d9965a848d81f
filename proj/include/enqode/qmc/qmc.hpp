// enqode: quantum-based Monte Carlo
// Copyright 2026 The enqode Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "enqode/functions/functions.hpp"
#include "enqode/sim/circuit.hpp"

namespace enqode {

/// 2^m mass points (basis index i stands for points[i]) with probabilities.
struct DiscreteDistribution {
  std::vector<double> points;
  std::vector<double> probabilities;

  /// Points 0..2^m-1.
  static DiscreteDistribution on_indices(std::vector<double> probabilities);
  static DiscreteDistribution uniform(int m);
  static DiscreteDistribution point_mass(int m, std::uint64_t x0);

  int qubits() const;
  /// Throws on size or normalization problems (tolerance 1e-12).
  void check() const;
};

/// A bare array of probabilities, or {"points": [...], "probabilities": [...]}.
DiscreteDistribution distribution_from_json(const nlohmann::json& j);

struct CrossoverFlags {
  /// 1/eps <= 2^m: the mass-point count exceeds the query budget.
  bool epsilon_vs_2m = false;
  /// depth(F) / c_f with c_f = 1 per table lookup.
  double cF_vs_cf_ratio = 0.0;
};

struct McReport {
  double estimate = 0.0;
  double truth = 0.0;
  double abs_error = 0.0;
  std::string method;
  std::uint64_t queries = 0;
  int circuit_depth = 0;
  CrossoverFlags crossover_flags;
  /// QAE only: the derived mu-level bound at the truth and the exact
  /// probability that the estimate falls within it.
  double error_bound = 0.0;
  double bound_mass = 0.0;
};

nlohmann::json to_json(const McReport& r);

/// Amplitude loader of sqrt(p) on qubits 0..m-1, then R_f with its flag on
/// qubit m.
Circuit build_F(const DiscreteDistribution& x, const FunctionTable& f);

/// sum_i p_i f(x_i), with f given by table index.
double direct_sum(const DiscreteDistribution& x, const FunctionTable& f);

McReport qmc_expectation(const DiscreteDistribution& x, const FunctionTable& f, int m,
                         std::uint64_t shots, std::uint64_t seed);

/// Mean of f over `samples` draws from x. One query per sample.
McReport classical_mc(const DiscreteDistribution& x, const FunctionTable& f, std::uint64_t samples,
                      std::uint64_t seed);

struct ComplexityRow {
  double epsilon = 0.0;
  int qae_m = 0;
  std::uint64_t qae_queries = 0;
  std::uint64_t mc_samples = 0;
  std::uint64_t direct_cost = 0;
  int depth_F = 0;
  double depth_vs_2m = 0.0;
  bool epsilon_vs_2m = false;
  /// qae_queries * depth_F >= direct_cost.
  bool direct_sum_cheaper = false;
};

/**
 * One row per eps: QAE precision ceil(lg 1/eps), F applications for one QAE
 * shot, classical samples for a 95% interval of half-width eps, and the
 * 2^m cost of direct summation.
 */
std::vector<ComplexityRow> complexity_report(const DiscreteDistribution& x, const FunctionTable& f,
                                             const std::vector<double>& epsilon_grid);
nlohmann::json to_json(const ComplexityRow& r);
std::string complexity_csv(const std::vector<ComplexityRow>& rows);

/**
 * x.points holds domain values; g maps each onto a basis index and f is the
 * function on the domain. `table` must satisfy table[g(x)] = f(x), which is
 * checked on every basis state g(x) before running.
 */
McReport qmc_with_mapping(const DiscreteDistribution& x,
                          const std::function<std::uint64_t(double)>& g,
                          const std::function<double(double)>& f, const FunctionTable& table,
                          int m, std::uint64_t shots, std::uint64_t seed);

}  // namespace enqode
