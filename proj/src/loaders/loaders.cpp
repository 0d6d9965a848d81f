// enqode: state-preparation circuits
// Copyright 2026 The enqode Authors.
// SPDX-License-Identifier: Apache-2.0
#include "enqode/loaders/loaders.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>
#include <string>

#include "enqode/errors.hpp"
#include "enqode/loaders/multiplexor.hpp"
#include "enqode/trees/trees.hpp"

namespace enqode {

namespace {

constexpr double kNormTolerance = 1e-10;

std::vector<int> iota_vec(int start, int count) {
  std::vector<int> v(count);
  std::iota(v.begin(), v.end(), start);
  return v;
}

int index_bits(std::size_t length, const char* what) {
  if (length < 2 || !std::has_single_bit(length))
    throw ShapeError(std::string(what) + " length " + std::to_string(length) +
                     " is not a power of two >= 2");
  return std::countr_zero(length);
}

template <typename T>
void check_normalized(std::span<const T> a) {
  double s = 0.0;
  for (const auto& v : a) s += std::norm(v);
  if (std::abs(s - 1.0) > kNormTolerance)
    throw EncodingDomainError("amplitude vector not normalized (norm^2 = " +
                              std::to_string(s) + ")");
}

void check_width(int width) {
  if (width > kMaxLoaderWidth)
    throw CapacityError("loader width " + std::to_string(width) + " exceeds the cap of " +
                        std::to_string(kMaxLoaderWidth));
}

LoaderOutput finish(Circuit c, std::vector<int> data, std::vector<int> ancilla,
                    std::uint64_t prep_ops) {
  if (!data.empty() && data.back() - data.front() + 1 == static_cast<int>(data.size()) &&
      std::is_sorted(data.begin(), data.end()))
    c.add_register("data", data.front(), static_cast<int>(data.size()));
  auto report = make_report(c, prep_ops);
  return {std::move(c), report, std::move(data), std::move(ancilla)};
}

// Magnitude tree levels on `qubits` (low bit first), with the last level
// optionally replaced by signed leaf angles.
void append_tree(Circuit& c, const std::vector<int>& qubits, const AngleTree& angles,
                 std::size_t first_node = 0) {
  const int n = static_cast<int>(qubits.size());
  for (int k = 0; k < n; ++k) {
    const auto& level = angles.levels[k];
    const std::size_t width = std::size_t{1} << k;
    std::vector<double> alpha(level.begin() + first_node * width,
                              level.begin() + (first_node + 1) * width);
    std::vector<int> selectors(qubits.begin() + (n - k), qubits.end());
    append_multiplexed_ry(c, qubits[n - 1 - k], selectors, alpha);
  }
}

Circuit amplitude_circuit(std::span<const cplx> a, std::uint64_t& ops) {
  const int n = index_bits(a.size(), "amplitude vector");
  check_normalized(a);
  const bool real = std::all_of(a.begin(), a.end(),
                                [](const cplx& v) { return v.imag() == 0.0; });
  std::vector<double> mags(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) mags[i] = std::abs(a[i]);
  const auto tree = build_state_tree(mags);
  auto angles = tree_to_angles(tree);
  ops = (2 * a.size() - 1) + (a.size() - 1);
  if (real) {
    // Signs go into the leaf rotations: cos(t/2), sin(t/2) may be negative.
    auto& leaf = angles.levels[n - 1];
    for (std::size_t j = 0; j < leaf.size(); ++j)
      leaf[j] = 2.0 * std::atan2(a[2 * j + 1].real(), a[2 * j].real());
  }
  Circuit c(n);
  const auto qubits = iota_vec(0, n);
  append_tree(c, qubits, angles);
  if (!real) {
    std::vector<double> phases(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) phases[i] = std::arg(a[i]);
    append_diagonal(c, qubits, std::move(phases));
    ops += a.size();
  }
  return c;
}

}  // namespace

ResourceReport make_report(const Circuit& c, std::uint64_t preprocessing_ops) {
  const auto m = c.metrics();
  return {m.width, m.depth, m.cnot_count, m.multi_qubit_count, preprocessing_ops};
}

nlohmann::json to_json(const ResourceReport& r) {
  return {{"width", r.width},
          {"depth", r.depth},
          {"cnots", r.cnot_count},
          {"multi_qubit_gates", r.multi_qubit_gates},
          {"classical_preprocessing_ops", r.classical_preprocessing_ops}};
}

LoaderOutput load_basis(std::uint64_t x, int m) {
  if (m < 1 || m > kMaxQubits) throw SizeError("basis register size out of range");
  if (x >> m)
    throw EncodingDomainError("value " + std::to_string(x) + " does not fit in " +
                              std::to_string(m) + " qubits");
  Circuit c(m);
  for (int k = 0; k < m; ++k)
    if ((x >> k) & 1) c.add(Gate::x(k));
  return finish(std::move(c), iota_vec(0, m), {}, m);
}

LoaderOutput load_angle(std::span<const double> thetas) {
  if (thetas.empty()) throw ArgumentError("angle loader needs at least one value");
  check_width(static_cast<int>(thetas.size()));
  Circuit c(static_cast<int>(thetas.size()));
  for (std::size_t i = 0; i < thetas.size(); ++i) {
    if (!(thetas[i] >= 0.0 && thetas[i] <= std::numbers::pi / 2))
      throw EncodingDomainError("angle " + std::to_string(thetas[i]) +
                                " outside [0, pi/2]");
    c.add(Gate::ry(static_cast<int>(i), 2.0 * thetas[i]));
  }
  const int n = static_cast<int>(thetas.size());
  return finish(std::move(c), iota_vec(0, n), {}, thetas.size());
}

LoaderOutput load_fourier(std::uint64_t x, int m) {
  if (m < 1 || m > kMaxQubits) throw SizeError("Fourier register size out of range");
  if (x >> m)
    throw EncodingDomainError("value " + std::to_string(x) + " does not fit in " +
                              std::to_string(m) + " qubits");
  Circuit c(m);
  for (int k = 0; k < m; ++k) c.add(Gate::h(k));
  for (int k = 0; k < m; ++k) {
    const std::uint64_t period = std::uint64_t{1} << (m - k);
    const std::uint64_t r = x % period;
    if (r) c.add(Gate::p(k, 2.0 * std::numbers::pi * static_cast<double>(r) /
                                static_cast<double>(period)));
  }
  return finish(std::move(c), iota_vec(0, m), {}, m);
}

LoaderOutput load_amplitude(std::span<const cplx> a) {
  std::uint64_t ops = 0;
  Circuit c = amplitude_circuit(a, ops);
  const int n = c.n_qubits();
  return finish(std::move(c), iota_vec(0, n), {}, ops);
}

LoaderOutput load_amplitude(std::span<const double> a) {
  std::vector<cplx> z(a.begin(), a.end());
  return load_amplitude(std::span<const cplx>(z));
}

LoaderOutput load_equally_weighted(std::span<const std::uint64_t> xs, int m) {
  if (m < 1 || m > kMaxQubits) throw SizeError("register size out of range");
  const std::uint64_t dim = std::uint64_t{1} << m;
  if (xs.empty() || xs.size() > dim)
    throw ArgumentError("equally-weighted set must have between 1 and 2^m elements");
  std::set<std::uint64_t> seen;
  for (auto x : xs) {
    if (x >= dim)
      throw EncodingDomainError("value " + std::to_string(x) + " does not fit in " +
                                std::to_string(m) + " qubits");
    if (!seen.insert(x).second)
      throw ArgumentError("duplicate value " + std::to_string(x) + " in equally-weighted set");
  }
  if (xs.size() == 1) return load_basis(xs[0], m);
  if (xs.size() == dim) {
    Circuit c(m);
    for (int k = 0; k < m; ++k) c.add(Gate::h(k));
    return finish(std::move(c), iota_vec(0, m), {}, xs.size());
  }
  std::vector<cplx> ind(dim, 0.0);
  const double w = 1.0 / std::sqrt(static_cast<double>(xs.size()));
  for (auto x : xs) ind[x] = w;
  return load_amplitude(std::span<const cplx>(ind));
}

LoaderOutput load_divide_conquer(std::span<const double> a) { return load_bidirectional(a, 1); }

LoaderOutput load_bidirectional(std::span<const double> a, int s) {
  const int n = index_bits(a.size(), "amplitude vector");
  if (s < 1 || s > n)
    throw ArgumentError("split level " + std::to_string(s) + " outside [1, " +
                        std::to_string(n) + "]");
  check_normalized(a);
  const int top = n - s;
  const int n_nodes = (1 << top) - 1;
  const int n_regs = 1 << top;
  const long long width = static_cast<long long>(n_nodes) + static_cast<long long>(s) * n_regs;
  if (width > kMaxLoaderWidth)
    throw CapacityError("loader width " + std::to_string(width) + " exceeds the cap of " +
                        std::to_string(kMaxLoaderWidth));

  std::vector<double> mags(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) mags[i] = std::abs(a[i]);
  const auto angles = tree_to_angles(build_state_tree(mags));

  Circuit c(static_cast<int>(width));
  // Node qubits in heap order: node j of level l is qubit 2^l - 1 + j.
  for (int l = 0; l < top; ++l)
    for (int j = 0; j < (1 << l); ++j) c.add(Gate::ry((1 << l) - 1 + j, angles.levels[l][j]));

  // Bottom registers: the subtree below register j, loaded locally.
  auto reg_qubits = [&](int j) { return iota_vec(n_nodes + j * s, s); };
  AngleTree local;
  local.levels.assign(angles.levels.begin() + top, angles.levels.end());
  for (int j = 0; j < n_regs; ++j) append_tree(c, reg_qubits(j), local, j);

  // Chain of an entity: its own qubit followed by its leftmost descendants,
  // ending with a whole bottom register.
  auto chain = [&](int node_or_reg, bool is_reg) {
    std::vector<int> out;
    int h = node_or_reg;
    if (!is_reg) {
      while (true) {
        out.push_back(h);
        const int level = std::bit_width(static_cast<unsigned>(h + 1)) - 1;
        if (level == top - 1) {
          h = 2 * (h - ((1 << level) - 1));
          break;
        }
        h = 2 * h + 1;
      }
    }
    auto r = reg_qubits(h);
    out.insert(out.end(), r.begin(), r.end());
    return out;
  };
  for (int h = n_nodes - 1; h >= 0; --h) {
    const int level = std::bit_width(static_cast<unsigned>(h + 1)) - 1;
    std::vector<int> left, right;
    if (level == top - 1) {
      const int j = h - ((1 << level) - 1);
      left = chain(2 * j, true);
      right = chain(2 * j + 1, true);
    } else {
      left = chain(2 * h + 1, false);
      right = chain(2 * h + 2, false);
    }
    for (std::size_t k = 0; k < left.size(); ++k) c.add(Gate::cswap(h, left[k], right[k]));
  }

  std::vector<int> data = reg_qubits(0);
  for (int l = top - 1; l >= 0; --l) data.push_back((1 << l) - 1);
  std::vector<char> used(width, 0);
  for (int q : data) used[q] = 1;
  std::vector<int> ancilla;
  for (int q = 0; q < width; ++q)
    if (!used[q]) ancilla.push_back(q);
  const std::uint64_t ops = 3 * a.size();
  return finish(std::move(c), std::move(data), std::move(ancilla), ops);
}

LoaderOutput load_multi_register(std::span<const std::uint64_t> xs, int m) {
  if (xs.empty()) throw ArgumentError("multi-register loader needs at least one value");
  if (m < 1) throw SizeError("register size must be positive");
  const long long width = static_cast<long long>(m) * static_cast<long long>(xs.size());
  if (width > kMaxLoaderWidth) throw CapacityError("multi-register width exceeds the cap");
  Circuit c(static_cast<int>(width));
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i] >> m)
      throw EncodingDomainError("value " + std::to_string(xs[i]) + " does not fit in " +
                                std::to_string(m) + " qubits");
    for (int k = 0; k < m; ++k)
      if ((xs[i] >> k) & 1) c.add(Gate::x(static_cast<int>(i) * m + k));
  }
  const int w = static_cast<int>(width);
  return finish(std::move(c), iota_vec(0, w), {}, xs.size());
}

Circuit qram_oracle(std::span<const std::uint64_t> xs, int value_qubits) {
  const int k = index_bits(xs.size(), "qRAM table");
  if (value_qubits < 1) throw SizeError("value register must have at least one qubit");
  if (k + value_qubits > 20) throw CapacityError("qRAM table too large to tabulate");
  for (auto x : xs)
    if (x >> value_qubits)
      throw EncodingDomainError("qRAM value " + std::to_string(x) + " overflows " +
                                std::to_string(value_qubits) + " value qubits");
  // |i>|y> -> |i>|y xor x_i>, which is |i>|x_i> on y = 0.
  const std::uint64_t size = std::uint64_t{1} << (k + value_qubits);
  std::vector<std::uint64_t> table(size);
  for (std::uint64_t v = 0; v < size; ++v) {
    const std::uint64_t i = v & ((std::uint64_t{1} << k) - 1);
    table[v] = v ^ (xs[i] << k);
  }
  Circuit c(k + value_qubits);
  Gate g = Gate::permutation(iota_vec(0, k + value_qubits), std::move(table));
  g.query = true;
  c.add(std::move(g));
  c.add_register("index", 0, k);
  c.add_register("value", k, value_qubits);
  return c;
}

LoaderOutput load_qram(std::span<const std::uint64_t> xs, int value_qubits,
                       std::span<const cplx> weights) {
  const Circuit oracle = qram_oracle(xs, value_qubits);
  const int k = std::countr_zero(xs.size());
  Circuit c(oracle.n_qubits());
  std::uint64_t ops = xs.size();
  if (weights.empty()) {
    for (int q = 0; q < k; ++q) c.add(Gate::h(q));
  } else {
    if (weights.size() != xs.size()) throw ShapeError("qRAM weights and table differ in length");
    std::uint64_t amp_ops = 0;
    c.append(amplitude_circuit(weights, amp_ops));
    ops += amp_ops;
  }
  c.append(oracle);
  c.add_register("index", 0, k);
  c.add_register("value", k, value_qubits);
  auto report = make_report(c, ops);
  return {std::move(c), report, iota_vec(0, k + value_qubits), {}};
}

}  // namespace enqode
