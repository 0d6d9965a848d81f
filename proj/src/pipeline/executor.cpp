// enqode: pipeline execution
// Copyright 2026 The enqode Authors.
// SPDX-License-Identifier: Apache-2.0
#include "enqode/pipeline/executor.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <optional>

#include "enqode/converters/converters.hpp"
#include "enqode/extractors/extractors.hpp"
#include "enqode/functions/functions.hpp"
#include "enqode/loaders/loaders.hpp"
#include "enqode/pipeline/typecheck.hpp"
#include "enqode/sim/permutation_marginals.hpp"
#include "enqode/sim/rng.hpp"
#include "enqode/sim/simulator.hpp"
#include "resolve.hpp"

namespace enqode {

using namespace detail;

namespace {

constexpr std::uint64_t kMaxHeraldAttempts = 100000;

// Current state: an optional post-selected register followed by a circuit.
struct Machine {
  Circuit prep{1};
  std::optional<StateVector> base;
  std::vector<int> data;
  std::vector<int> output;  // function_graph value register
  int flag = -1;
  std::optional<std::vector<std::uint64_t>> qram_values;
  int qram_value_qubits = 0;

  int width() const { return prep.n_qubits(); }

  StateVector dense() const {
    StateVector s = base ? *base : StateVector::zero(width());
    if (s.n_qubits() < width()) s = s.tensor(StateVector::zero(width() - s.n_qubits()));
    return apply_circuit(std::move(s), prep);
  }

  std::vector<double> distribution(const std::vector<int>& qubits) const {
    if (base) return marginal_probabilities(dense(), qubits);
    return circuit_marginals(prep, qubits);
  }

  // Grows the circuit by `extra` fresh qubits and returns their indices.
  std::vector<int> grow(int extra) {
    std::vector<int> fresh(extra);
    std::iota(fresh.begin(), fresh.end(), width());
    prep = prep.widened(width() + extra);
    return fresh;
  }
};

nlohmann::json step_record(const Step& s, const std::optional<EncodingType>& in,
                           const std::optional<EncodingType>& out, int width, const Circuit* c) {
  nlohmann::json j;
  j["kind"] = to_string(s.kind);
  j["name"] = s.name;
  j["encoding_in"] = in ? nlohmann::json(to_string(*in)) : nlohmann::json(nullptr);
  j["encoding_out"] = out ? nlohmann::json(to_string(*out)) : nlohmann::json(nullptr);
  j["width"] = width;
  const auto m = c ? c->metrics() : CircuitMetrics{};
  j["depth"] = m.depth;
  j["cnots"] = m.cnot_count;
  return j;
}

// Sources are rescaled to unit norm; inputs already normalized are left bit-exact.
template <class T>
std::vector<T> normalized(std::vector<T> v) {
  double n2 = 0.0;
  for (const auto& x : v) n2 += std::norm(x);
  if (std::abs(n2 - 1.0) > 1e-10) {
    const double k = 1.0 / std::sqrt(n2);
    for (auto& x : v) x *= k;
  }
  return v;
}

std::vector<double> load_reals(const Step& s, const std::vector<cplx>& values) {
  auto reals = real_parts(values);
  if (param_word(s, "kind", "amplitudes") == "probabilities") {
    for (double& x : reals) {
      if (x < 0) throw EncodingDomainError("probabilities must be nonnegative");
      x = std::sqrt(x);
    }
  } else if (param_word(s, "kind", "amplitudes") != "amplitudes") {
    throw ArgumentError("kind must be amplitudes or probabilities");
  }
  return normalized(std::move(reals));
}

void run_load(Machine& mc, const Step& s, const EncodingType& t, const std::filesystem::path& base_dir) {
  const auto values = resolve_values(*s.operand, base_dir);
  const auto& f = t.family;
  auto take = [&](LoaderOutput out) {
    mc.prep = std::move(out.circuit);
    mc.data = std::move(out.data_register);
  };
  if (f == "basis") {
    take(load_basis(integer_parts(values)[0], t.param("m")));
  } else if (f == "fourier") {
    take(load_fourier(integer_parts(values)[0], t.param("m")));
  } else if (f == "angle") {
    const auto th = real_parts(values);
    take(load_angle(th));
  } else if (f == "multi_register") {
    take(load_multi_register(integer_parts(values), t.param("m")));
  } else if (f == "equally_weighted") {
    take(load_equally_weighted(integer_parts(values), t.param("m")));
  } else if (f == "amplitude") {
    const bool real = std::all_of(values.begin(), values.end(), [](cplx z) { return z.imag() == 0.0; });
    if (real || s.find_param("kind")) {
      const auto a = load_reals(s, values);
      take(load_amplitude(std::span<const double>(a)));
    } else {
      const auto a = normalized(values);
      take(load_amplitude(std::span<const cplx>(a)));
    }
  } else if (f == "divide_conquer") {
    const auto a = load_reals(s, values);
    take(load_divide_conquer(a));
  } else if (f == "bidirectional") {
    const auto a = load_reals(s, values);
    take(load_bidirectional(a, t.param("s")));
  } else if (f == "qram") {
    const auto xs = integer_parts(values);
    take(load_qram(xs, t.param("value_qubits")));
    mc.qram_values = xs;
    mc.qram_value_qubits = t.param("value_qubits");
  } else {
    throw ArgumentError("unknown encoding '" + f + "'");
  }
}

// Post-selected conversion; retries with fresh draws until the ancilla reads 1.
Circuit run_ew_to_amplitude(Machine& mc, std::uint64_t step_seed, std::uint64_t& attempts) {
  const int v = mc.qram_value_qubits;
  if (v < 2) throw SizeError("ew_to_amplitude needs value_qubits >= 2 (digit d = x / 2^(v-1))");
  const double scale = std::ldexp(1.0, v - 1);
  std::vector<double> digits;
  for (auto x : *mc.qram_values) {
    if (static_cast<double>(x) > scale)
      throw EncodingDomainError("qram value " + std::to_string(x) + " exceeds 2^(value_qubits-1)");
    digits.push_back(static_cast<double>(x) / scale);
  }
  const auto loader = make_digit_loader(digits, v - 1);
  for (attempts = 1; attempts <= kMaxHeraldAttempts; ++attempts) {
    auto r = convert_ew_to_amplitude(loader, derive_seed(step_seed, attempts - 1));
    if (r.success_probability <= 0.0) throw EncodingDomainError("ew_to_amplitude: success probability is 0");
    if (!r.success) continue;
    mc.base = std::move(*r.data);
    mc.prep = Circuit(loader.index_qubits);
    mc.data.resize(loader.index_qubits);
    std::iota(mc.data.begin(), mc.data.end(), 0);
    mc.qram_values.reset();
    return r.circuit;
  }
  throw EncodingDomainError("ew_to_amplitude: no success in " + std::to_string(kMaxHeraldAttempts) + " attempts");
}

// Pure state of the data register when every other qubit is in a basis state.
std::vector<cplx> data_amplitudes(const Machine& mc) {
  const auto s = mc.dense();
  const auto& a = s.amplitudes();
  std::size_t best = 0;
  for (std::size_t i = 1; i < a.size(); ++i)
    if (std::norm(a[i]) > std::norm(a[best])) best = i;
  std::vector<cplx> out(std::size_t{1} << mc.data.size());
  double mass = 0.0;
  for (std::uint64_t k = 0; k < out.size(); ++k) {
    out[k] = a[scatter_bits(best, k, mc.data)];
    mass += std::norm(out[k]);
  }
  if (std::abs(mass - s.norm_squared()) > 1e-9)
    throw EncodingDomainError("data register is entangled with auxiliary qubits");
  return out;
}

std::uint64_t shots_param(const Step& s, long long fallback) {
  const long long v = param_int(s, "shots", fallback);
  if (v < 0) throw ArgumentError("shots must be nonnegative");
  return static_cast<std::uint64_t>(v);
}

nlohmann::json run_extract(const Machine& mc, const Step& s, const EncodingType& in, std::uint64_t seed,
                           std::uint64_t& queries, const std::filesystem::path& base_dir) {
  nlohmann::json r;
  r["method"] = s.name;
  const auto& read = in.family == "function_graph" ? mc.output : mc.data;
  if (s.name == "basis_readout") {
    const auto p = mc.distribution(read);
    const auto it = std::max_element(p.begin(), p.end());
    if (*it < 1.0 - 1e-9)
      throw NotDeterministicError("register is not in a basis state (largest probability " +
                                  std::to_string(*it) + ")");
    const auto value = static_cast<std::uint64_t>(it - p.begin());
    r["value"] = value;
    if (in.family == "multi_register") {
      const int m = in.param("m");
      std::vector<std::uint64_t> regs;
      for (int j = 0; j < in.param("N"); ++j) regs.push_back((value >> (j * m)) & ((1ULL << m) - 1));
      r["registers"] = regs;
    }
    queries = 1;
  } else if (s.name == "mode") {
    const auto strategy = param_word(s, "strategy", "mode");
    if (strategy != "mode" && strategy != "median") throw ArgumentError("strategy must be mode or median");
    const auto shots = shots_param(s, 100);
    if (shots == 0) throw ArgumentError("mode needs shots >= 1");
    const auto p = mc.distribution(read);
    const auto m = mode_from_distribution(p, shots, seed,
                                          strategy == "median" ? ModeStrategy::Median : ModeStrategy::Mode);
    r["value"] = m.mode;
    nlohmann::json h = nlohmann::json::object();
    for (const auto& [k, c] : m.histogram) h[std::to_string(k)] = c;
    r["histogram"] = h;
    queries = shots;
  } else if (s.name == "naive") {
    const auto shots = shots_param(s, 1000);
    if (shots == 0) throw ArgumentError("naive needs shots >= 1");
    const double alpha = param_double(s, "alpha", 0.95);
    const auto p = mc.distribution({mc.flag});
    const auto est = naive_estimate_from_probability(p[1], shots, alpha, seed);
    r = to_json(est);
    queries = est.oracle_queries;
  } else if (s.name == "qae") {
    const long long m = param_int(s, "m", 4);
    if (m < 1 || m > 16) throw SizeError("qae m must be in 1..16");
    const auto shots = shots_param(s, 1);
    if (shots == 0) throw ArgumentError("qae needs shots >= 1");
    const auto est = qae_estimate(mc.prep, mc.flag, static_cast<int>(m), shots, seed);
    r = to_json(est);
    queries = est.oracle_queries;
  } else if (s.name == "swap_test") {
    const auto shots = shots_param(s, 1000);
    const auto a = data_amplitudes(mc);
    const auto b = normalized(resolve_values(*s.find_param("with"), base_dir));
    const auto la = load_amplitude(std::span<const cplx>(a));
    const auto lb = load_amplitude(std::span<const cplx>(b));
    const auto t = swap_test(la.circuit, lb.circuit, shots, seed);
    r["p0_estimate"] = t.p0_estimate;
    r["overlap_estimate"] = t.overlap_estimate;
    r["p0_exact"] = t.p0_exact;
    r["shots"] = t.shots;
    queries = 2 * std::max<std::uint64_t>(shots, 1);
  } else {
    throw ArgumentError("unknown extraction method " + s.name);
  }
  return r;
}

}  // namespace

nlohmann::json execute(const PipelineSpec& spec, std::uint64_t seed, const ExecOptions& opts) {
  const auto tc = typecheck(spec, opts.base_dir);
  if (!tc.ok()) {
    std::string msg;
    for (const auto& e : tc.errors) msg += (msg.empty() ? "" : "\n") + e.message;
    throw PipelineTypeError(msg);
  }
  const auto t0 = std::chrono::steady_clock::now();
  Machine mc;
  nlohmann::json steps = nlohmann::json::array();
  nlohmann::json result;
  std::uint64_t queries = 0;

  for (int i = 0; i < static_cast<int>(spec.steps.size()); ++i) {
    const Step& s = spec.steps[i];
    const TypedStep& ts = tc.steps[i];
    try {
      if (s.kind == StepKind::Load) {
        run_load(mc, s, *ts.out, opts.base_dir);
        mc.flag = mc.data.empty() ? -1 : mc.data.back();
        steps.push_back(step_record(s, ts.in, ts.out, mc.width(), &mc.prep));
      } else if (s.kind == StepKind::Convert) {
        if (s.name == "ew_to_amplitude") {
          std::uint64_t attempts = 0;
          const Circuit c = run_ew_to_amplitude(mc, derive_seed(seed, static_cast<std::uint64_t>(i)), attempts);
          auto rec = step_record(s, ts.in, ts.out, c.n_qubits(), &c);
          rec["attempts"] = attempts;
          steps.push_back(rec);
        } else {
          const int m = static_cast<int>(mc.data.size());
          const Circuit c = s.name == "qft" ? qft_circuit(m) : inverse_qft_circuit(m);
          mc.prep.append(c, mc.data);
          steps.push_back(step_record(s, ts.in, ts.out, mc.width(), &c));
        }
        mc.flag = mc.data.back();
      } else if (s.kind == StepKind::Apply) {
        const auto f = resolve_function(s, static_cast<int>(mc.data.size()), opts.base_dir);
        Circuit c = s.name == "digital_oracle" ? digital_oracle(f) : amplitude_oracle(f);
        const int extra = c.n_qubits() - static_cast<int>(mc.data.size());
        const auto fresh = mc.grow(extra);
        auto map = mc.data;
        map.insert(map.end(), fresh.begin(), fresh.end());
        mc.prep.append(c, map);
        if (s.name == "digital_oracle") {
          mc.output = fresh;
        } else {
          mc.data = map;  // the flag joins the data register
          mc.flag = fresh.back();
        }
        steps.push_back(step_record(s, ts.in, ts.out, mc.width(), &c));
      } else {
        result = run_extract(mc, s, *ts.in, seed, queries, opts.base_dir);
        steps.push_back(step_record(s, ts.in, std::nullopt, mc.width(), nullptr));
      }
    } catch (const ExecutionError&) {
      throw;
    } catch (const Error& e) {
      throw ExecutionError(i, e.what());
    }
  }

  nlohmann::json report;
  report["pipeline"] = spec.name;
  report["steps"] = steps;
  report["result"] = result;
  report["queries"] = queries;
  report["seed"] = seed;
  if (opts.timing)
    report["wall_time_s"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

}  // namespace enqode
