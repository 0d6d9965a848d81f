// Shared helpers for the unit and acceptance tests.
#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "enqode/sim/rng.hpp"
#include "enqode/sim/state_vector.hpp"

namespace enqode::testing {

inline double gauss(Rng& rng) {
  // Box-Muller on the portable uniform stream.
  const double u1 = 1.0 - rng.uniform(), u2 = rng.uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

inline std::vector<cplx> random_complex_vector(Rng& rng, std::size_t dim) {
  std::vector<cplx> v(dim);
  double s = 0.0;
  for (auto& x : v) {
    x = {gauss(rng), gauss(rng)};
    s += std::norm(x);
  }
  for (auto& x : v) x /= std::sqrt(s);
  return v;
}

inline std::vector<double> random_real_vector(Rng& rng, std::size_t dim, bool nonnegative) {
  std::vector<double> v(dim);
  double s = 0.0;
  for (auto& x : v) {
    x = gauss(rng);
    if (nonnegative) x = std::abs(x);
    s += x * x;
  }
  for (auto& x : v) x /= std::sqrt(s);
  return v;
}

inline std::vector<double> random_probabilities(Rng& rng, std::size_t dim) {
  std::vector<double> p(dim);
  double s = 0.0;
  for (auto& x : p) {
    x = rng.uniform() + 1e-3;
    s += x;
  }
  for (auto& x : p) x /= s;
  return p;
}

inline StateVector random_state(Rng& rng, int n) {
  return StateVector::from_amplitudes(random_complex_vector(rng, std::size_t{1} << n));
}

using Matrix = std::vector<std::vector<cplx>>;  // column-major list of columns

inline Matrix kron(const Matrix& high, const Matrix& low) {
  const std::size_t dh = high.size(), dl = low.size();
  Matrix out(dh * dl, std::vector<cplx>(dh * dl));
  for (std::size_t ch = 0; ch < dh; ++ch)
    for (std::size_t cl = 0; cl < dl; ++cl)
      for (std::size_t rh = 0; rh < dh; ++rh)
        for (std::size_t rl = 0; rl < dl; ++rl)
          out[ch * dl + cl][rh * dl + rl] = high[ch][rh] * low[cl][rl];
  return out;
}

inline double max_unitarity_defect(const Matrix& u) {
  const std::size_t d = u.size();
  double worst = 0.0;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      cplx s = 0.0;
      for (std::size_t k = 0; k < d; ++k) s += std::conj(u[i][k]) * u[j][k];
      worst = std::max(worst, std::abs(s - (i == j ? 1.0 : 0.0)));
    }
  return worst;
}

/// Least-squares slope and intercept of y against x.
inline std::pair<double, double> linear_fit(const std::vector<double>& x,
                                            const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  return {slope, (sy - slope * sx) / n};
}

}  // namespace enqode::testing
