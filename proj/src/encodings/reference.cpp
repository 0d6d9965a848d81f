// enqode: reference states and decoding
// Copyright 2026 The enqode Authors.
// SPDX-License-Identifier: Apache-2.0
#include "enqode/encodings/reference.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>

#include "enqode/errors.hpp"
#include "enqode/loaders/loaders.hpp"
#include "enqode/sim/simulator.hpp"

namespace enqode {

namespace {

constexpr double kDecodeTolerance = 1e-9;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

using Violations = std::vector<std::string>;

bool fits(double v, int bits) {
  return bits >= 63 || v < static_cast<double>(std::uint64_t{1} << bits);
}

bool is_nonnegative_integer(const cplx& v) {
  return v.imag() == 0.0 && v.real() >= 0.0 && v.real() == std::floor(v.real());
}

void check_count(Violations& out, const DataSet& data, std::size_t want, const char* what) {
  if (data.size() != want)
    out.push_back(std::string(what) + " expects " + std::to_string(want) + " values, got " +
                  std::to_string(data.size()));
}

void check_integers_fit(Violations& out, const DataSet& data, int bits) {
  for (const auto& v : data.values) {
    if (!is_nonnegative_integer(v)) {
      out.push_back("value " + std::to_string(v.real()) + " is not a nonnegative integer");
      return;
    }
    if (!fits(v.real(), bits)) {
      out.push_back("value " + std::to_string(static_cast<long long>(v.real())) +
                    " out of range for " + std::to_string(bits) + " qubits");
      return;
    }
  }
}

void check_normalized(Violations& out, const std::vector<cplx>& a) {
  double s = 0.0;
  for (const auto& v : a) s += std::norm(v);
  if (std::abs(s - 1.0) > 1e-12) out.push_back("not normalized");
}

void check_amplitude_data(Violations& out, const DataSet& data, int n, bool real_only) {
  if (n > 24) {
    out.push_back("index register too large");
    return;
  }
  check_count(out, data, std::size_t{1} << n, "amplitude data");
  if (data.kind == DataKind::Integers) out.push_back("amplitude data cannot be integers");
  if (data.kind == DataKind::ProbabilityVector) {
    for (auto& e : data.check_kind()) out.push_back(e);
    return;
  }
  if (real_only)
    for (const auto& v : data.values)
      if (v.imag() != 0.0) {
        out.push_back("complex amplitudes are not supported by this loader family");
        break;
      }
  check_normalized(out, data.values);
}

std::vector<double> real_amplitudes(const DataSet& data) {
  std::vector<double> out;
  for (const auto& v : data.amplitudes()) out.push_back(v.real());
  return out;
}

StateVector basis_state(int n, std::uint64_t index) { return StateVector::basis(n, index); }

std::uint64_t decode_basis_index(const StateVector& s) {
  for (std::size_t i = 0; i < s.dimension(); ++i)
    if (std::norm(s[i]) >= 1.0 - kDecodeTolerance) return i;
  throw DecodeError("state is not a computational basis state");
}

void require_match(const StateVector& want, const StateVector& s, const char* what) {
  if (fidelity(want, s) < 1.0 - kDecodeTolerance)
    throw DecodeError(std::string("state is not a valid ") + what + " encoding");
}

std::vector<int> iota_vec(int start, int count) {
  std::vector<int> v(count);
  std::iota(v.begin(), v.end(), start);
  return v;
}

std::vector<std::uint64_t> distinct_sorted(std::vector<std::uint64_t> xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

}  // namespace

Violations validate(const EncodingDescriptor& d, const DataSet& data) {
  Violations out = check_parameters(d);
  if (!out.empty()) return out;
  if (register_width(d) > kMaxLoaderWidth) out.push_back("encoding width exceeds the loader cap");
  std::visit(
      overloaded{
          [&](const Basis& x) {
            check_count(out, data, 1, "basis");
            check_integers_fit(out, data, x.m);
          },
          [&](const MappedBasis& x) {
            check_count(out, data, 1, "mapped_basis");
            if (data.size() == 1 &&
                std::find(x.domain.begin(), x.domain.end(), data.values[0].real()) ==
                    x.domain.end())
              out.push_back("value " + std::to_string(data.values[0].real()) +
                            " is outside the mapping domain");
          },
          [&](const Angle& x) {
            check_count(out, data, static_cast<std::size_t>(x.N), "angle");
            for (const auto& v : data.values)
              if (v.imag() != 0.0 || !(v.real() >= 0.0 && v.real() <= std::numbers::pi / 2)) {
                out.push_back("angle " + std::to_string(v.real()) + " outside [0, pi/2]");
                break;
              }
          },
          [&](const Fourier& x) {
            check_count(out, data, 1, "fourier");
            check_integers_fit(out, data, x.m);
          },
          [&](const MultiRegister& x) {
            check_count(out, data, static_cast<std::size_t>(x.N), "multi_register");
            check_integers_fit(out, data, x.m);
          },
          [&](const EquallyWeighted& x) {
            if (data.size() == 0) out.push_back("equally_weighted set is empty");
            check_integers_fit(out, data, x.m);
            if (out.empty()) {
              auto xs = data.integer_values();
              if (distinct_sorted(xs).size() != xs.size())
                out.push_back("equally_weighted set has duplicate values");
            }
          },
          [&](const Amplitude& x) { check_amplitude_data(out, data, x.n, false); },
          [&](const DivideConquer& x) { check_amplitude_data(out, data, x.n, true); },
          [&](const Bidirectional& x) { check_amplitude_data(out, data, x.n, true); },
          [&](const QRam& x) {
            check_count(out, data, std::size_t{1} << x.index_qubits, "qram table");
            check_integers_fit(out, data, x.value_qubits);
            if (!data.weights.empty()) {
              if (data.weights.size() != data.size())
                out.push_back("qram weights and values differ in length");
              check_normalized(out, data.weights);
            }
          },
          [&](const Entangled& x) {
            if (data.parts.size() != x.components.size()) {
              out.push_back("entangled data needs one part per component");
              return;
            }
            if (!x.joint) {
              for (std::size_t c = 0; c < x.components.size(); ++c)
                for (auto& e : validate(x.components[c], data.parts[c]))
                  out.push_back("component " + std::to_string(c) + ": " + e);
              return;
            }
            const std::size_t terms = data.parts[0].size();
            if (terms == 0) out.push_back("joint encoding needs at least one term");
            std::set<std::vector<std::uint64_t>> seen;
            for (std::size_t c = 0; c < x.components.size(); ++c) {
              if (!x.components[c].is<Basis>()) {
                out.push_back("joint encodings combine basis components only");
                return;
              }
              if (data.parts[c].size() != terms)
                out.push_back("joint components must have the same number of terms");
              check_integers_fit(out, data.parts[c], x.components[c].as<Basis>().m);
            }
            if (!out.empty()) return;
            for (std::size_t t = 0; t < terms; ++t) {
              std::vector<std::uint64_t> key;
              for (const auto& part : data.parts)
                key.push_back(static_cast<std::uint64_t>(part.values[t].real()));
              if (!seen.insert(key).second) {
                out.push_back("joint encoding repeats a term");
                break;
              }
            }
            if (!data.weights.empty()) {
              if (data.weights.size() != terms) out.push_back("one weight per term expected");
              check_normalized(out, data.weights);
            }
          },
      },
      d.v);
  if (out.empty() && register_width(d) > kMaxQubits &&
      !(d.is<DivideConquer>() || d.is<Bidirectional>()))
    out.push_back("encoding width exceeds the simulator capacity");
  return out;
}

StateVector reference_state(const EncodingDescriptor& d, const DataSet& data) {
  const auto problems = validate(d, data);
  if (!problems.empty()) {
    std::string msg = to_string(d) + ": ";
    for (std::size_t i = 0; i < problems.size(); ++i) msg += (i ? "; " : "") + problems[i];
    throw EncodingDomainError(msg);
  }
  if (register_width(d) > kMaxQubits)
    throw CapacityError(to_string(d) + " is too wide for a dense reference state");
  return std::visit(
      overloaded{
          [&](const Basis& x) { return basis_state(x.m, data.integer_values()[0]); },
          [&](const MappedBasis& x) {
            const auto it = std::find(x.domain.begin(), x.domain.end(), data.values[0].real());
            return basis_state(x.m, static_cast<std::uint64_t>(it - x.domain.begin()));
          },
          [&](const Angle& x) {
            auto th = data.real_values();
            std::vector<cplx> amps(std::size_t{1} << x.N);
            for (std::size_t i = 0; i < amps.size(); ++i) {
              double a = 1.0;
              for (int q = 0; q < x.N; ++q)
                a *= ((i >> q) & 1) ? std::sin(th[q]) : std::cos(th[q]);
              amps[i] = a;
            }
            return StateVector::from_amplitudes(std::move(amps));
          },
          [&](const Fourier& x) {
            const std::uint64_t v = data.integer_values()[0];
            const std::uint64_t M = std::uint64_t{1} << x.m;
            const double norm = 1.0 / std::sqrt(static_cast<double>(M));
            std::vector<cplx> amps(M);
            for (std::uint64_t j = 0; j < M; ++j)
              amps[j] = std::polar(norm, 2.0 * std::numbers::pi *
                                             static_cast<double>((v * j) % M) /
                                             static_cast<double>(M));
            return StateVector::from_amplitudes(std::move(amps));
          },
          [&](const MultiRegister& x) {
            std::uint64_t idx = 0;
            const auto xs = data.integer_values();
            for (std::size_t i = 0; i < xs.size(); ++i) idx |= xs[i] << (i * x.m);
            return basis_state(x.m * x.N, idx);
          },
          [&](const EquallyWeighted& x) {
            const auto xs = data.integer_values();
            std::vector<cplx> amps(std::size_t{1} << x.m);
            const double w = 1.0 / std::sqrt(static_cast<double>(xs.size()));
            for (auto v : xs) amps[v] = w;
            return StateVector::from_amplitudes(std::move(amps));
          },
          [&](const Amplitude&) { return StateVector::from_amplitudes(data.amplitudes()); },
          [&](const DivideConquer&) {
            return simulate(load_divide_conquer(real_amplitudes(data)).circuit);
          },
          [&](const Bidirectional& x) {
            return simulate(load_bidirectional(real_amplitudes(data), x.s).circuit);
          },
          [&](const QRam& x) {
            const auto xs = data.integer_values();
            std::vector<cplx> w = data.weights;
            if (w.empty()) w.assign(xs.size(), 1.0 / std::sqrt(static_cast<double>(xs.size())));
            std::vector<cplx> amps(std::size_t{1} << (x.index_qubits + x.value_qubits));
            for (std::uint64_t i = 0; i < xs.size(); ++i) amps[i | (xs[i] << x.index_qubits)] = w[i];
            return StateVector::from_amplitudes(std::move(amps));
          },
          [&](const Entangled& x) {
            if (!x.joint) {
              StateVector s = reference_state(x.components[0], data.parts[0]);
              for (std::size_t c = 1; c < x.components.size(); ++c)
                s = s.tensor(reference_state(x.components[c], data.parts[c]));
              return s;
            }
            const std::size_t terms = data.parts[0].size();
            std::vector<cplx> w = data.weights;
            if (w.empty()) w.assign(terms, 1.0 / std::sqrt(static_cast<double>(terms)));
            std::vector<cplx> amps(std::size_t{1} << register_width(d));
            for (std::size_t t = 0; t < terms; ++t) {
              std::uint64_t idx = 0;
              int off = 0;
              for (std::size_t c = 0; c < x.components.size(); ++c) {
                idx |= static_cast<std::uint64_t>(data.parts[c].values[t].real()) << off;
                off += register_width(x.components[c]);
              }
              amps[idx] = w[t];
            }
            return StateVector::from_amplitudes(std::move(amps));
          },
      },
      d.v);
}

std::vector<double> reference_marginals(const EncodingDescriptor& d, const DataSet& data) {
  if (!(d.is<Amplitude>() || d.is<DivideConquer>() || d.is<Bidirectional>()))
    throw ArgumentError("reference marginals are defined for the amplitude family only");
  const auto problems = validate(d, data);
  if (!problems.empty()) throw EncodingDomainError(to_string(d) + ": " + problems.front());
  std::vector<double> p;
  for (const auto& a : data.amplitudes()) p.push_back(std::norm(a));
  return p;
}

std::vector<int> data_qubits(const EncodingDescriptor& d) {
  if (d.is<DivideConquer>() || d.is<Bidirectional>()) {
    const int n = d.is<DivideConquer>() ? d.as<DivideConquer>().n : d.as<Bidirectional>().n;
    const int s = d.is<DivideConquer>() ? 1 : d.as<Bidirectional>().s;
    std::vector<double> u(std::size_t{1} << n, 1.0 / std::sqrt(static_cast<double>(1 << n)));
    return load_bidirectional(u, s).data_register;
  }
  return iota_vec(0, register_width(d));
}

DataSet decode(const EncodingDescriptor& d, const StateVector& s) {
  if (s.n_qubits() != register_width(d))
    throw DecodeError("state has " + std::to_string(s.n_qubits()) + " qubits, " +
                      to_string(d) + " needs " + std::to_string(register_width(d)));
  return std::visit(
      overloaded{
          [&](const Basis&) { return DataSet::integers({decode_basis_index(s)}); },
          [&](const MappedBasis& x) { return DataSet::reals({x.domain[decode_basis_index(s)]}); },
          [&](const Angle& x) {
            std::vector<double> th(x.N);
            for (int q = 0; q < x.N; ++q) {
              const std::vector<int> one{q};
              const auto p = marginal_probabilities(s, one);
              th[q] = std::atan2(std::sqrt(p[1]), std::sqrt(p[0]));
            }
            auto out = DataSet::reals(th);
            require_match(reference_state(d, out), s, "angle");
            return out;
          },
          [&](const Fourier& x) {
            const std::uint64_t M = std::uint64_t{1} << x.m;
            if (std::abs(s[0]) < 1e-12) throw DecodeError("state is not a valid Fourier encoding");
            const double phi = std::arg(s[1] / s[0]);
            auto v = static_cast<long long>(std::llround(phi * static_cast<double>(M) /
                                                         (2.0 * std::numbers::pi)));
            v = ((v % static_cast<long long>(M)) + static_cast<long long>(M)) %
                static_cast<long long>(M);
            auto out = DataSet::integers({static_cast<std::uint64_t>(v)});
            require_match(reference_state(d, out), s, "Fourier");
            return out;
          },
          [&](const MultiRegister& x) {
            const auto idx = decode_basis_index(s);
            std::vector<std::uint64_t> xs(x.N);
            for (int i = 0; i < x.N; ++i) xs[i] = (idx >> (i * x.m)) & ((1ULL << x.m) - 1);
            return DataSet::integers(xs);
          },
          [&](const EquallyWeighted&) {
            std::vector<std::uint64_t> support;
            for (std::size_t i = 0; i < s.dimension(); ++i)
              if (std::norm(s[i]) > 1e-12) support.push_back(i);
            auto out = DataSet::integers(support);
            require_match(reference_state(d, out), s, "equally-weighted");
            return out;
          },
          [&](const Amplitude&) { return DataSet::complex_vector(s.amplitudes()); },
          [&](const DivideConquer&) {
            std::vector<double> mags;
            for (double p : marginal_probabilities(s, data_qubits(d))) mags.push_back(std::sqrt(p));
            return DataSet::reals(mags);
          },
          [&](const Bidirectional&) {
            std::vector<double> mags;
            for (double p : marginal_probabilities(s, data_qubits(d))) mags.push_back(std::sqrt(p));
            return DataSet::reals(mags);
          },
          [&](const QRam& x) {
            const std::uint64_t K = std::uint64_t{1} << x.index_qubits;
            std::vector<std::uint64_t> xs(K, 0);
            std::vector<cplx> w(K, 0.0);
            std::vector<char> found(K, 0);
            for (std::size_t idx = 0; idx < s.dimension(); ++idx) {
              if (std::norm(s[idx]) <= 1e-12) continue;
              const std::uint64_t i = idx & (K - 1);
              if (found[i]) throw DecodeError("qRAM index holds more than one value");
              found[i] = 1;
              xs[i] = idx >> x.index_qubits;
              w[i] = s[idx];
            }
            auto out = DataSet::integers(xs);
            out.weights = std::move(w);
            return out;
          },
          [&](const Entangled& x) {
            DataSet out;
            out.kind = DataKind::Integers;
            if (x.joint) {
              out.parts.resize(x.components.size());
              for (auto& p : out.parts) p.kind = DataKind::Integers;
              for (std::size_t idx = 0; idx < s.dimension(); ++idx) {
                if (std::norm(s[idx]) <= 1e-12) continue;
                int off = 0;
                for (std::size_t c = 0; c < x.components.size(); ++c) {
                  const int w = register_width(x.components[c]);
                  out.parts[c].values.emplace_back(
                      static_cast<double>((idx >> off) & ((1ULL << w) - 1)), 0.0);
                  off += w;
                }
                out.weights.push_back(s[idx]);
              }
              return out;
            }
            // Independent: slice through the largest amplitude.
            std::size_t best = 0;
            for (std::size_t i = 1; i < s.dimension(); ++i)
              if (std::norm(s[i]) > std::norm(s[best])) best = i;
            int off = 0;
            for (const auto& comp : x.components) {
              const int w = register_width(comp);
              const auto q = iota_vec(off, w);
              std::vector<cplx> slice(std::size_t{1} << w);
              double norm = 0.0;
              for (std::uint64_t v = 0; v < slice.size(); ++v) {
                slice[v] = s[scatter_bits(best, v, q)];
                norm += std::norm(slice[v]);
              }
              for (auto& a : slice) a /= std::sqrt(norm);
              out.parts.push_back(decode(comp, StateVector::from_amplitudes(std::move(slice))));
              off += w;
            }
            require_match(reference_state(d, out), s, "independent");
            return out;
          },
      },
      d.v);
}

}  // namespace enqode
