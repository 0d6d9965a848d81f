// enqode: quantum Fourier transform
// Copyright 2026 The enqode Authors.
// SPDX-License-Identifier: Apache-2.0
#include <numbers>

#include "enqode/converters/converters.hpp"
#include "enqode/errors.hpp"

namespace enqode {

Circuit qft_circuit(int m) {
  if (m < 1 || m > 12) throw SizeError("QFT size must be in [1, 12]");
  Circuit c(m);
  for (int j = m - 1; j >= 0; --j) {
    c.add(Gate::h(j));
    for (int l = j - 1; l >= 0; --l)
      c.add(Gate::cp(l, j, 2.0 * std::numbers::pi / static_cast<double>(1ULL << (j - l + 1))));
  }
  for (int j = 0; j < m / 2; ++j) c.add(Gate::swap(j, m - 1 - j));
  c.add_register("data", 0, m);
  return c;
}

Circuit inverse_qft_circuit(int m) { return qft_circuit(m).inverse(); }

}  // namespace enqode
