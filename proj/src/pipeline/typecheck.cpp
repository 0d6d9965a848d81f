// enqode: pipeline type checking
// Copyright 2026 The enqode Authors.
// SPDX-License-Identifier: Apache-2.0
#include "enqode/pipeline/typecheck.hpp"

#include <algorithm>
#include <cmath>

#include "enqode/errors.hpp"
#include "enqode/pipeline/catalog.hpp"
#include "resolve.hpp"

namespace enqode {

using namespace detail;

int data_width(const EncodingType& t) {
  const auto& f = t.family;
  if (f == "basis" || f == "fourier" || f == "equally_weighted") return t.param("m");
  if (f == "amplitude" || f == "divide_conquer" || f == "bidirectional" || f == "generalized_amplitude")
    return t.param("n");
  if (f == "angle") return t.param("N");
  if (f == "multi_register") return t.param("m") * t.param("N");
  if (f == "qram") return t.param("index_qubits") + t.param("value_qubits");
  if (f == "function_graph") return t.param("n_in") + t.param("n_out");
  throw ArgumentError("unknown family " + f);
}

namespace {

// Data-domain checks that the loaders would otherwise raise at run time.
void check_load_domain(const Step& step, const EncodingType& t, const std::vector<cplx>& values) {
  const auto& f = t.family;
  auto fits = [](std::uint64_t x, int bits) { return bits >= 64 || x < (std::uint64_t{1} << bits); };
  if (f == "basis" || f == "fourier" || f == "multi_register" || f == "equally_weighted") {
    const auto xs = integer_parts(values);
    const int m = t.param("m");
    for (auto x : xs)
      if (!fits(x, m)) throw SizeError("value " + std::to_string(x) + " does not fit in m=" + std::to_string(m) + " bits");
    if (f == "equally_weighted") {
      auto sorted = xs;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw EncodingDomainError("equally_weighted values must be distinct");
    }
  } else if (f == "qram") {
    const int v = t.param("value_qubits");
    for (auto x : integer_parts(values))
      if (!fits(x, v)) throw SizeError("value " + std::to_string(x) + " does not fit in value_qubits=" + std::to_string(v));
  } else if (f == "amplitude" || f == "divide_conquer" || f == "bidirectional") {
    const auto kind = param_word(step, "kind", "amplitudes");
    if (kind != "amplitudes" && kind != "probabilities")
      throw ArgumentError("kind must be amplitudes or probabilities");
    double norm = 0.0;
    for (const auto& z : values) {
      if (kind == "probabilities" && (z.imag() != 0.0 || z.real() < 0.0))
        throw EncodingDomainError("probabilities must be real and nonnegative");
      norm += kind == "probabilities" ? z.real() : std::norm(z);
    }
    if (!(norm > 0.0)) throw EncodingDomainError("data vector is zero");
    if (f == "bidirectional" && t.param("s") > t.param("n"))
      throw SizeError("bidirectional s must be at most n");
  }
}

}  // namespace

EncodingType load_type(const Step& step, const std::filesystem::path& base_dir) {
  if (!step.operand) throw ArgumentError("load needs a data source");
  const auto values = resolve_values(*step.operand, base_dir);
  if (values.empty()) throw ShapeError("data source is empty");
  const std::string& f = step.name;
  EncodingType t{f, {}, false};
  if (f == "basis" || f == "fourier") {
    if (values.size() != 1) throw ShapeError(f + " loads exactly one integer");
    const auto x = integer_parts(values)[0];
    t.params["m"] = static_cast<int>(param_int(step, "m", bit_width_min1(x)));
  } else if (f == "angle") {
    t.params["N"] = static_cast<int>(values.size());
  } else if (f == "multi_register" || f == "equally_weighted") {
    const auto xs = integer_parts(values);
    const auto top = *std::max_element(xs.begin(), xs.end());
    t.params["m"] = static_cast<int>(param_int(step, "m", bit_width_min1(top)));
    if (f == "multi_register") t.params["N"] = static_cast<int>(xs.size());
  } else if (f == "amplitude" || f == "divide_conquer" || f == "bidirectional") {
    const int n = log2_size(values.size(), f + " data");
    t.params["n"] = n;
    if (f == "bidirectional") t.params["s"] = static_cast<int>(param_int(step, "s", std::max(1, n / 2)));
  } else if (f == "qram") {
    const auto xs = integer_parts(values);
    t.params["index_qubits"] = log2_size(xs.size(), "qram table");
    const auto top = *std::max_element(xs.begin(), xs.end());
    t.params["value_qubits"] = static_cast<int>(param_int(step, "value_qubits", bit_width_min1(top)));
  } else {
    throw ArgumentError("unknown encoding '" + f + "'");
  }
  for (const auto& [k, v] : t.params)
    if (v < 1) throw SizeError(f + " parameter " + k + " must be positive");
  check_load_domain(step, t, values);
  return t;
}

EncodingType step_output_type(const Step& step, const EncodingType& in) {
  const auto* sig = find_step(step.kind, step.name);
  if (!sig) throw ArgumentError("unknown step " + step.name);
  EncodingType out{sig->produces, {}, in.heralded || sig->heralded};
  if (step.name == "qft" || step.name == "qft_inverse") {
    out.params["m"] = in.param("m");
  } else if (step.name == "ew_to_amplitude") {
    out.params["n"] = in.param("index_qubits");
  } else if (step.name == "amplitude_oracle") {
    out.params["n"] = data_width(in) + 1;
  } else if (step.name == "digital_oracle") {
    const int n_in = data_width(in);
    out.params["n_in"] = n_in;
    out.params["n_out"] = static_cast<int>(param_int(step, "n_out", n_in));
  }
  return out;
}

namespace {

std::string describe(const Step& s) { return to_string(s.kind) + " " + s.name; }

std::string accepted_list(const StepSignature& sig) {
  std::string s;
  for (const auto& a : sig.accepts) s += (s.empty() ? "" : " | ") + a;
  return s;
}

}  // namespace

TypecheckResult typecheck(const PipelineSpec& spec, const std::filesystem::path& base_dir) {
  TypecheckResult r;
  r.steps.resize(spec.steps.size());
  std::optional<EncodingType> cur;
  auto fail = [&](int i, std::string expected, std::string found, const std::string& why) {
    const auto& s = spec.steps[i];
    r.errors.push_back({i, expected, found,
                        "step " + std::to_string(i) + " (" + describe(s) + "): expected " + expected +
                            ", found " + found + (why.empty() ? "" : ": " + why)});
  };

  for (int i = 0; i < static_cast<int>(spec.steps.size()); ++i) {
    const Step& s = spec.steps[i];
    TypedStep& ts = r.steps[i];
    ts.in = cur;
    if (s.kind == StepKind::Load) {
      try {
        cur = load_type(s, base_dir);
      } catch (const Error& e) {
        fail(i, "a valid " + s.name + " source", s.operand ? s.operand->print() : "nothing", e.what());
        return r;
      }
      ts.out = cur;
      continue;
    }
    if (!cur) return r;
    const auto* sig = find_step(s.kind, s.name);
    if (!sig) {
      fail(i, "a catalog step", s.name, "unknown step");
      return r;
    }
    bool ok = true;
    if (!accepts(*sig, cur->family)) {
      fail(i, accepted_list(*sig), to_string(*cur), sig->reject_note);
      ok = false;
    } else if (sig->needs_unitary && cur->heralded) {
      fail(i, accepted_list(*sig) + " with a unitary preparation", to_string(*cur), sig->reject_note);
      ok = false;
    }
    if (ok && s.kind == StepKind::Apply) {
      try {
        resolve_function(s, data_width(*cur), base_dir);
      } catch (const Error& e) {
        fail(i, "a function on 2^" + std::to_string(data_width(*cur)) + " points for " + to_string(*cur),
             s.operand ? s.operand->print() : "nothing", e.what());
        ok = false;
      }
    }
    if (ok && s.name == "swap_test") {
      const Value* with = s.find_param("with");
      if (!with) {
        fail(i, "with=<source> of the same amplitude size", "no second state", "");
        ok = false;
      } else {
        try {
          const auto n = log2_size(resolve_values(*with, base_dir).size(), "swap_test partner");
          if (n != cur->param("n")) {
            EncodingType partner{"amplitude", {{"n", n}}, false};
            fail(i, to_string(*cur) + " partner", to_string(partner), "register sizes differ");
            ok = false;
          }
        } catch (const Error& e) {
          fail(i, "a valid swap_test partner", with->print(), e.what());
          ok = false;
        }
      }
    }
    if (s.kind == StepKind::Extract) {
      ts.result = sig->produces;
      continue;
    }
    if (!ok) return r;  // later steps cannot be typed
    cur = step_output_type(s, *cur);
    ts.out = cur;
  }
  return r;
}

}  // namespace enqode
