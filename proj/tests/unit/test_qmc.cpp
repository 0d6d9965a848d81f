#include <doctest.h>

#include <cmath>
#include <numbers>

#include "enqode/errors.hpp"
#include "enqode/qmc/qmc.hpp"
#include "enqode/sim/simulator.hpp"
#include "support.hpp"

using namespace enqode;

namespace {

double flag_probability(const Circuit& F, int flag) {
  const int q[] = {flag};
  return marginal_probabilities(simulate(F), q)[1];
}

const FunctionTable kRamp = builtin_function("linear_ramp", 2);

}  // namespace

TEST_CASE("build_F") {
  auto u = DiscreteDistribution::uniform(2);
  CHECK(flag_probability(build_F(u, FunctionTable::amplitude(2, {1, 1, 1, 1})), 2) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(flag_probability(build_F(u, FunctionTable::amplitude(2, {0, 0, 0, 0})), 2) < 1e-20);
  CHECK(flag_probability(build_F(u, kRamp), 2) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK_THROWS_AS(build_F(u, builtin_function("linear_ramp", 3)), CompatibilityError);

  Rng rng(31);
  for (int t = 0; t < 50; ++t) {
    const int m = 1 + static_cast<int>(rng.below(4));
    auto x = DiscreteDistribution::on_indices(testing::random_probabilities(rng, 1u << m));
    std::vector<double> fv(1u << m);
    for (auto& v : fv) v = rng.uniform();
    auto f = FunctionTable::amplitude(m, fv);
    CHECK(std::abs(flag_probability(build_F(x, f), m) - direct_sum(x, f)) <= 1e-10);
  }
}

TEST_CASE("direct_sum") {
  CHECK(direct_sum(DiscreteDistribution::uniform(2), kRamp) == doctest::Approx(0.5));
  CHECK(direct_sum(DiscreteDistribution::uniform(3), FunctionTable::amplitude(3, std::vector<double>(8, 0.3))) ==
        doctest::Approx(0.3));
  CHECK(direct_sum(DiscreteDistribution::point_mass(2, 2), kRamp) == doctest::Approx(2.0 / 3));
}

TEST_CASE("qmc_expectation") {
  auto r = qmc_expectation(DiscreteDistribution::uniform(2), kRamp, 4, 1, 7);
  CHECK(r.estimate == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(r.bound_mass == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(r.queries == 31);

  // Point mass at x0 = 3: f = 1 is on the grid.
  auto pm = qmc_expectation(DiscreteDistribution::point_mass(2, 3), kRamp, 3, 1, 0);
  CHECK(pm.estimate == doctest::Approx(1.0).epsilon(1e-12));

  auto x = DiscreteDistribution::on_indices({0.1, 0.2, 0.3, 0.4});
  auto off = qmc_expectation(x, kRamp, 5, 1, 3);
  CHECK(off.truth == doctest::Approx(0.2 / 3 + 0.6 / 3 + 0.4));
  CHECK(off.bound_mass >= 8 / (std::numbers::pi * std::numbers::pi));

  auto a = to_json(qmc_expectation(x, kRamp, 5, 9, 11));
  auto b = to_json(qmc_expectation(x, kRamp, 5, 9, 11));
  CHECK(a.dump() == b.dump());
}

TEST_CASE("classical_mc") {
  auto pm = classical_mc(DiscreteDistribution::point_mass(2, 1), kRamp, 1, 5);
  CHECK(pm.estimate == doctest::Approx(1.0 / 3));
  auto u = DiscreteDistribution::uniform(2);
  auto r = classical_mc(u, kRamp, 100000, 12);
  double ef2 = 0.0;
  for (double v : kRamp.values) ef2 += v * v / 4;
  const double var = ef2 - 0.25;
  CHECK(std::abs(r.estimate - 0.5) <= 3 * std::sqrt(var / 100000));
  CHECK(classical_mc(u, kRamp, 1000, 3).estimate == classical_mc(u, kRamp, 1000, 3).estimate);
  CHECK(r.queries == 100000);
}

TEST_CASE("complexity_report") {
  auto rows = complexity_report(DiscreteDistribution::uniform(2), kRamp, {std::ldexp(1.0, -4), 0.5});
  CHECK(rows[0].qae_m == 4);
  CHECK(rows[0].qae_queries == 31);
  CHECK(rows[0].direct_cost == 4);
  CHECK(rows[1].qae_m == 1);
  CHECK(rows[1].direct_sum_cheaper);
  CHECK_FALSE(rows[0].epsilon_vs_2m);
  CHECK(rows[1].epsilon_vs_2m);
  // MC samples scale with eps^-2.
  auto r2 = complexity_report(DiscreteDistribution::uniform(2), kRamp, {0.02, 0.01});
  CHECK(static_cast<double>(r2[1].mc_samples) / r2[0].mc_samples == doctest::Approx(4.0).epsilon(0.01));
  for (int m = 3; m <= 6; ++m) {
    auto row = complexity_report(DiscreteDistribution::uniform(m), builtin_function("linear_ramp", m), {0.1});
    CHECK(row[0].depth_vs_2m > 0.0);
  }
  CHECK(complexity_csv(rows).rfind("epsilon,", 0) == 0);
}

TEST_CASE("qmc_with_mapping") {
  auto x = DiscreteDistribution::uniform(2);
  x.points = {-2, -1, 0, 1};
  auto g = [](double v) { return static_cast<std::uint64_t>(v + 2); };
  auto f = [](double v) { return (v + 2) / 3; };
  auto r = qmc_with_mapping(x, g, f, kRamp, 4, 1, 2);
  CHECK(r.truth == doctest::Approx(0.5));
  CHECK(r.estimate == doctest::Approx(0.5).epsilon(1e-12));

  // Identity mapping matches the plain path.
  auto plain = qmc_expectation(DiscreteDistribution::uniform(2), kRamp, 4, 3, 8);
  auto ident = qmc_with_mapping(DiscreteDistribution::uniform(2), [](double v) { return static_cast<std::uint64_t>(v); },
                                [](double v) { return v / 3; }, kRamp, 4, 3, 8);
  CHECK(to_json(plain).dump() == to_json(ident).dump());

  // Table built from raw values (negatives clipped) instead of g-indices.
  auto raw = FunctionTable::amplitude(2, {0.0, 0.0, 2.0 / 3, 1.0});
  CHECK_THROWS_AS(qmc_with_mapping(x, g, f, raw, 4, 1, 2), CompatibilityError);
}
