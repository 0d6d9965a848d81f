// enqode: step signature table
// Copyright 2026 The enqode Authors.
// SPDX-License-Identifier: Apache-2.0
#include "enqode/pipeline/catalog.hpp"

#include <algorithm>
#include <set>

namespace enqode {

const std::vector<LoadSignature>& load_catalog() {
  static const std::vector<LoadSignature> table = {
      {"basis", {"m"}},
      {"angle", {}},
      {"fourier", {"m"}},
      {"multi_register", {"m"}},
      {"equally_weighted", {"m"}},
      {"amplitude", {"kind"}},
      {"divide_conquer", {"kind"}},
      {"bidirectional", {"s", "kind"}},
      {"qram", {"value_qubits"}},
  };
  return table;
}

const std::vector<SubtypeEdge>& subtype_edges() {
  static const std::vector<SubtypeEdge> edges = {
      {"amplitude", "generalized_amplitude"},
      {"divide_conquer", "generalized_amplitude"},
      {"bidirectional", "generalized_amplitude"},
  };
  return edges;
}

const std::vector<StepSignature>& step_catalog() {
  static const std::vector<StepSignature> table = {
      {StepKind::Convert, "qft", {"basis"}, "fourier", {}, false, false,
       "the QFT converts basis-encoded integers", "m(m+1)/2 gates"},
      {StepKind::Convert, "qft_inverse", {"fourier"}, "basis", {}, false, false,
       "the inverse QFT expects a Fourier-encoded register", "m(m+1)/2 gates"},
      {StepKind::Convert, "ew_to_amplitude", {"qram"}, "amplitude", {}, false, true,
       "needs the uniform index-digit form |i>|d_i>",
       "one U_D, one U_D^dagger, one multiplexed RY; succeeds with probability mean(d^2)"},
      {StepKind::Apply, "amplitude_oracle",
       {"basis", "equally_weighted", "amplitude", "divide_conquer", "bidirectional"},
       "generalized_amplitude", {}, false, false,
       "R_f reads its argument from a computational-basis data register",
       "multiplexed RY, 2^n CNOTs"},
      {StepKind::Apply, "digital_oracle", {"basis", "equally_weighted", "amplitude"}, "function_graph",
       {"n_out"}, false, false, "O_f reads its argument from a computational-basis data register",
       "one table permutation (one query)"},
      {StepKind::Extract, "basis_readout", {"basis", "multi_register", "function_graph"}, "integer", {},
       false, false, "a single measurement only suffices for deterministic basis states", "1 shot"},
      {StepKind::Extract, "mode",
       {"basis", "multi_register", "equally_weighted", "amplitude", "function_graph"}, "integer",
       {"shots", "strategy"}, false, false, "mode readout samples a computational-basis register",
       "shots"},
      {StepKind::Extract, "naive", {"generalized_amplitude"}, "estimate", {"shots", "alpha"}, false, false,
       "estimation needs a flag qubit in generalized amplitude form", "shots queries"},
      {StepKind::Extract, "qae", {"generalized_amplitude"}, "estimate", {"m", "shots"}, true, false,
       "amplitude estimation needs a unitary F in generalized amplitude form",
       "shots * (2 (2^m - 1) + 1) queries"},
      {StepKind::Extract, "swap_test", {"amplitude"}, "overlap", {"with", "shots"}, false, false,
       "the swap test estimates |<a|b>|^2 only for plain amplitude states; with node or "
       "auxiliary qubits entangled to the data the ancilla statistics lose that meaning",
       "2 loaders per shot"},
  };
  return table;
}

const StepSignature* find_step(StepKind kind, const std::string& name) {
  for (const auto& s : step_catalog())
    if (s.kind == kind && s.name == name) return &s;
  return nullptr;
}

const LoadSignature* find_load(const std::string& family) {
  for (const auto& s : load_catalog())
    if (s.family == family) return &s;
  return nullptr;
}

bool is_subtype(const std::string& sub, const std::string& super) {
  if (sub == super) return true;
  for (const auto& e : subtype_edges())
    if (e.sub == sub && is_subtype(e.super, super)) return true;
  return false;
}

bool accepts(const StepSignature& sig, const std::string& family) {
  return std::any_of(sig.accepts.begin(), sig.accepts.end(),
                     [&](const std::string& a) { return is_subtype(family, a); });
}

std::vector<std::string> all_families() {
  std::set<std::string> seen;
  std::vector<std::string> out;
  auto add = [&](const std::string& f) {
    if (seen.insert(f).second) out.push_back(f);
  };
  for (const auto& l : load_catalog()) add(l.family);
  for (const auto& s : step_catalog())
    if (s.kind != StepKind::Extract) add(s.produces);
  return out;
}

std::vector<Mismatch> declared_mismatches() {
  std::vector<Mismatch> out;
  for (const auto& f : all_families())
    for (const auto& s : step_catalog())
      if (!accepts(s, f)) out.push_back({f, &s});
  return out;
}

}  // namespace enqode
