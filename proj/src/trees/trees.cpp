// enqode: binary-tree preprocessing for amplitude loading
// Copyright 2026 The enqode Authors.
// SPDX-License-Identifier: Apache-2.0
#include "enqode/trees/trees.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "enqode/errors.hpp"

namespace enqode {

StateDecompositionTree build_state_tree(std::span<const double> magnitudes) {
  const std::size_t N = magnitudes.size();
  if (N < 2 || !std::has_single_bit(N))
    throw ShapeError("tree input length " + std::to_string(N) +
                     " is not a power of two >= 2");
  for (std::size_t i = 0; i < N; ++i)
    if (!(magnitudes[i] >= 0.0))
      throw EncodingDomainError("tree leaf " + std::to_string(i) + " is negative");
  const int n = std::countr_zero(N);
  StateDecompositionTree t;
  t.levels.resize(n + 1);
  t.levels[n].assign(magnitudes.begin(), magnitudes.end());
  for (int k = n - 1; k >= 0; --k) {
    const auto& below = t.levels[k + 1];
    auto& level = t.levels[k];
    level.resize(std::size_t{1} << k);
    for (std::size_t j = 0; j < level.size(); ++j)
      level[j] = std::hypot(below[2 * j], below[2 * j + 1]);
  }
  return t;
}

AngleTree tree_to_angles(const StateDecompositionTree& tree) {
  AngleTree out;
  out.levels.resize(tree.n());
  for (int k = 0; k < tree.n(); ++k) {
    const auto& below = tree.levels[k + 1];
    auto& level = out.levels[k];
    level.resize(std::size_t{1} << k);
    for (std::size_t j = 0; j < level.size(); ++j)
      level[j] = 2.0 * std::atan2(below[2 * j + 1], below[2 * j]);
  }
  return out;
}

std::vector<double> reconstruct_magnitudes(const AngleTree& angles) {
  std::vector<double> cur{1.0};
  for (const auto& level : angles.levels) {
    std::vector<double> next(cur.size() * 2);
    for (std::size_t j = 0; j < cur.size(); ++j) {
      next[2 * j] = cur[j] * std::cos(level[j] / 2);
      next[2 * j + 1] = cur[j] * std::sin(level[j] / 2);
    }
    cur = std::move(next);
  }
  return cur;
}

nlohmann::json to_json(const StateDecompositionTree& tree) {
  return {{"kind", "state_decomposition"}, {"levels", tree.levels}};
}

nlohmann::json to_json(const AngleTree& tree) {
  return {{"kind", "angles"}, {"levels", tree.levels}};
}

}  // namespace enqode
