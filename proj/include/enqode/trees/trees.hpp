// enqode: binary-tree preprocessing for amplitude loading
// Copyright 2026 The enqode Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <vector>

#include <json.hpp>

namespace enqode {

/// Partial norms, root level first. Level k holds 2^k nodes; the last level
/// holds the leaves.
struct StateDecompositionTree {
  std::vector<std::vector<double>> levels;

  /// Number of index bits (levels - 1).
  int n() const { return static_cast<int>(levels.size()) - 1; }
};

/// RY angles, root level first. Level k holds 2^k angles in [0, pi].
struct AngleTree {
  std::vector<std::vector<double>> levels;

  int n() const { return static_cast<int>(levels.size()); }
};

/// Builds the tree bottom up from nonnegative leaves. The length must be a
/// power of two, at least 2.
StateDecompositionTree build_state_tree(std::span<const double> magnitudes);

/// Angle theta with cos(theta/2) = left/parent and sin(theta/2) = right/parent.
/// Zero-weight parents get 0.
AngleTree tree_to_angles(const StateDecompositionTree& tree);

/// Leaf magnitudes obtained by descending the angle tree.
std::vector<double> reconstruct_magnitudes(const AngleTree& angles);

nlohmann::json to_json(const StateDecompositionTree& tree);
nlohmann::json to_json(const AngleTree& tree);

}  // namespace enqode
