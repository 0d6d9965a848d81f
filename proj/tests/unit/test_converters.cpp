#include <doctest.h>

#include <cmath>
#include <numbers>

#include "enqode/converters/converters.hpp"
#include "enqode/encodings/reference.hpp"
#include "enqode/errors.hpp"
#include "enqode/loaders/loaders.hpp"
#include "enqode/sim/simulator.hpp"
#include "support.hpp"

using namespace enqode;

TEST_CASE("qft matches the DFT") {
  for (int m = 1; m <= 6; ++m) {
    const auto u = circuit_matrix(qft_circuit(m));
    const std::uint64_t N = 1u << m;
    double worst = 0.0;
    for (std::uint64_t k = 0; k < N; ++k)
      for (std::uint64_t j = 0; j < N; ++j) {
        const cplx want = std::polar(1.0 / std::sqrt(static_cast<double>(N)),
                                     2.0 * std::numbers::pi * static_cast<double>((j * k) % N) /
                                         static_cast<double>(N));
        worst = std::max(worst, std::abs(u[k][j] - want));
      }
    CHECK(worst < 1e-10);
  }
  auto one = apply_circuit(StateVector::zero(1), qft_circuit(1));
  CHECK(one[0].real() == doctest::Approx(std::sqrt(0.5)));
  CHECK(one[1].real() == doctest::Approx(std::sqrt(0.5)));
  const auto u2 = circuit_matrix(qft_circuit(2));
  CHECK(std::abs(u2[1][1] - cplx(0, 0.5)) < 1e-12);
  CHECK(std::abs(u2[3][1] - cplx(0, -0.5)) < 1e-12);
  CHECK_THROWS_AS(qft_circuit(0), SizeError);
  CHECK_THROWS_AS(qft_circuit(13), SizeError);
}

TEST_CASE("qft inverse and converter law") {
  Rng rng(5);
  for (int m = 1; m <= 6; ++m) {
    auto s = testing::random_state(rng, m);
    auto back = apply_circuit(apply_circuit(s, qft_circuit(m)), inverse_qft_circuit(m));
    CHECK(fidelity(s, back) == doctest::Approx(1.0).epsilon(1e-10));
    for (std::uint64_t x = 0; x < (1u << m); ++x) {
      auto got = apply_circuit(StateVector::basis(m, x), qft_circuit(m));
      auto want = reference_state(EncodingDescriptor{Fourier{m}}, DataSet::integers({x}));
      double err = 0.0;
      for (std::uint64_t i = 0; i < got.dimension(); ++i) err = std::max(err, std::abs(got[i] - want[i]));
      CHECK(err < 1e-10);
    }
  }
}

namespace {

double data_fidelity(const StateVector& s, const std::vector<double>& d) {
  std::vector<cplx> want(s.dimension(), 0.0);
  double norm = 0.0;
  for (double v : d) norm += v * v;
  for (std::size_t i = 0; i < d.size(); ++i) want[i] = d[i] / std::sqrt(norm);
  auto w = StateVector::from_amplitudes(std::move(want));
  return fidelity(s, w);
}

}  // namespace

TEST_CASE("ew to amplitude examples") {
  {
    std::vector<double> d{1, 1, 1, 1};
    auto r = convert_ew_to_amplitude(make_digit_loader(d, 2), 1);
    CHECK(r.success_probability == doctest::Approx(1.0).epsilon(1e-12));
    REQUIRE(r.success);
    CHECK(data_fidelity(*r.data, d) == doctest::Approx(1.0).epsilon(1e-10));
  }
  {
    std::vector<double> d{0.5, 0.5, 0.5, 0.5};
    auto r = convert_ew_to_amplitude(make_digit_loader(d, 1), 3);
    CHECK(r.success_probability == doctest::Approx(0.25).epsilon(1e-12));
  }
  {
    std::vector<double> d{0.75, 0.25};
    auto u = make_digit_loader(d, 2);
    auto r = convert_ew_to_amplitude(u, 0);
    CHECK(r.success_probability == doctest::Approx(0.3125).epsilon(1e-12));
    for (std::uint64_t seed = 0; !r.success; ++seed) r = convert_ew_to_amplitude(u, seed);
    CHECK(data_fidelity(*r.data, d) >= 1 - 1e-10);
    CHECK(r.circuit.metrics().query_count == 2);
  }
  CHECK_THROWS_AS(make_digit_loader(std::vector<double>{0.3}, 2), EncodingDomainError);
}

TEST_CASE("ew to amplitude statistics") {
  Rng rng(77);
  for (int trial = 0; trial < 6; ++trial) {
    const int m = 1 + static_cast<int>(rng.below(4));
    const std::size_t N = 1 + rng.below(8);
    std::vector<double> d(N);
    double truth = 0.0;
    for (auto& v : d) {
      v = std::ldexp(static_cast<double>(rng.below((1u << m) + 1)), -m);
      truth += v * v / static_cast<double>(N);
    }
    if (truth == 0.0) continue;
    auto u = make_digit_loader(d, m);
    auto r = convert_ew_to_amplitude(u, trial);
    CHECK(r.success_probability == doctest::Approx(truth).epsilon(1e-10));
    const std::uint64_t T = 10000;
    const double freq = ew_to_amplitude_success_frequency(u, T, trial);
    CHECK(std::abs(freq - truth) <= 3 * std::sqrt(truth * (1 - truth) / T) + 1e-12);
    for (std::uint64_t seed = 100; !r.success; ++seed) r = convert_ew_to_amplitude(u, seed);
    CHECK(data_fidelity(*r.data, d) >= 1 - 1e-6);
  }
}

TEST_CASE("ew success vanishes with N") {
  // i.i.d. digits with mean 0.5: the expected success probability stays near
  // E[d^2] while the worst case over sets decays; use the analytic formula.
  Rng rng(3);
  double prev = 2.0;
  for (std::size_t N : {4u, 16u, 64u}) {
    // Sparse sets: one full digit, the rest drawn from {0, 1/4}.
    double p = 1.0;
    for (std::size_t i = 1; i < N; ++i) {
      const double v = rng.bernoulli(0.5) ? 0.25 : 0.0;
      p += v * v;
    }
    p /= static_cast<double>(N);
    CHECK(p < prev);
    prev = p;
  }
}

TEST_CASE("amplitude to ew") {
  auto convert = [](const std::vector<double>& d, int m) {
    auto u_a = load_amplitude(std::span<const double>(d)).circuit;
    auto conv = convert_amplitude_to_ew(u_a, m);
    return std::make_pair(conv, simulate(conv.circuit));
  };
  auto grid_fidelity = [&](const std::vector<double>& d, int m) {
    auto [conv, s] = convert(d, m);
    std::vector<std::uint64_t> k;
    for (double v : d) k.push_back(amplitude_to_digit(v, m));
    return ew_fidelity(s, conv, k);
  };
  CHECK(grid_fidelity({std::sqrt(0.5), std::sqrt(0.5)}, 3) >= 1 - 1e-6);
  CHECK(amplitude_to_digit(std::sqrt(0.5), 3) == 2);
  CHECK(digit_to_amplitude(2, 3) == doctest::Approx(std::sqrt(0.5)));
  CHECK(grid_fidelity({std::sin(std::numbers::pi / 8), std::cos(std::numbers::pi / 8)}, 4) >= 1 - 1e-6);

  // Uniform amplitudes: every index sees the same digit distribution.
  {
    auto [conv, s] = convert({0.5, 0.5, 0.5, 0.5}, 3);
    auto dist = ew_digit_distribution(s, conv);
    for (std::size_t i = 1; i < dist.size(); ++i)
      for (std::size_t k = 0; k < dist[i].size(); ++k) CHECK(std::abs(dist[i][k] - dist[0][k]) < 1e-10);
  }

  // Off the grid: at least 8/pi^2 of the mass within one grid step of theta,
  // and the decoding error averaged over random inputs shrinks with m. A
  // single input need not improve since its offset from the grid varies.
  Rng rng(21);
  double err[3] = {0, 0, 0};
  for (int t = 0; t < 10; ++t) {
    auto d = testing::random_real_vector(rng, 2, true);
    for (int m = 4; m <= 6; ++m) {
      auto [conv, s] = convert(d, m);
      auto dist = ew_digit_distribution(s, conv);
      for (std::size_t i = 0; i < d.size(); ++i) {
        const double theta = std::asin(d[i]) / std::numbers::pi;
        double near = 0.0;
        for (std::size_t k = 0; k < dist[i].size(); ++k) {
          if (std::abs(std::ldexp(static_cast<double>(k), -m) - theta) <= std::ldexp(1.0, -m))
            near += dist[i][k];
          err[m - 4] += dist[i][k] * std::abs(digit_to_amplitude(k, m) - d[i]);
        }
        CHECK(near >= 8 / (std::numbers::pi * std::numbers::pi) - 1e-9);
      }
    }
  }
  CHECK(err[1] < err[0]);
  CHECK(err[2] < err[1]);
  CHECK_THROWS_AS(convert_amplitude_to_ew(Circuit(6), 7), CapacityError);
}
