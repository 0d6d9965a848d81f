// enqode: encoding descriptors
// Copyright 2026 The enqode Authors.
// SPDX-License-Identifier: Apache-2.0
#include "enqode/encodings/descriptor.hpp"

#include <algorithm>
#include <set>

#include "enqode/errors.hpp"

namespace enqode {

bool Entangled::operator==(const Entangled& o) const {
  return joint == o.joint && components == o.components;
}

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

std::string variant_name(const EncodingDescriptor& d) {
  return std::visit(overloaded{
                        [](const Basis&) { return "basis"; },
                        [](const MappedBasis&) { return "mapped_basis"; },
                        [](const Angle&) { return "angle"; },
                        [](const Fourier&) { return "fourier"; },
                        [](const MultiRegister&) { return "multi_register"; },
                        [](const EquallyWeighted&) { return "equally_weighted"; },
                        [](const Amplitude&) { return "amplitude"; },
                        [](const DivideConquer&) { return "divide_conquer"; },
                        [](const Bidirectional&) { return "bidirectional"; },
                        [](const QRam&) { return "qram"; },
                        [](const Entangled&) { return "entangled"; },
                    },
                    d.v);
}

std::string to_string(const EncodingDescriptor& d) {
  const std::string name = variant_name(d);
  auto p = [](const char* k, int v) { return std::string(k) + "=" + std::to_string(v); };
  return std::visit(
      overloaded{
          [&](const Basis& x) { return name + "{" + p("m", x.m) + "}"; },
          [&](const MappedBasis& x) { return name + "{" + p("m", x.m) + "}"; },
          [&](const Angle& x) { return name + "{" + p("N", x.N) + "}"; },
          [&](const Fourier& x) { return name + "{" + p("m", x.m) + "}"; },
          [&](const MultiRegister& x) {
            return name + "{" + p("m", x.m) + "," + p("N", x.N) + "}";
          },
          [&](const EquallyWeighted& x) { return name + "{" + p("m", x.m) + "}"; },
          [&](const Amplitude& x) { return name + "{" + p("n", x.n) + "}"; },
          [&](const DivideConquer& x) { return name + "{" + p("n", x.n) + "}"; },
          [&](const Bidirectional& x) {
            return name + "{" + p("n", x.n) + "," + p("s", x.s) + "}";
          },
          [&](const QRam& x) {
            return name + "{" + p("index", x.index_qubits) + "," + p("value", x.value_qubits) +
                   "}";
          },
          [&](const Entangled& x) {
            std::string s = name + (x.joint ? "{joint:" : "{independent:");
            for (std::size_t i = 0; i < x.components.size(); ++i)
              s += (i ? "," : "") + to_string(x.components[i]);
            return s + "}";
          },
      },
      d.v);
}

int register_width(const EncodingDescriptor& d) {
  return std::visit(overloaded{
                        [](const Basis& x) { return x.m; },
                        [](const MappedBasis& x) { return x.m; },
                        [](const Angle& x) { return x.N; },
                        [](const Fourier& x) { return x.m; },
                        [](const MultiRegister& x) { return x.m * x.N; },
                        [](const EquallyWeighted& x) { return x.m; },
                        [](const Amplitude& x) { return x.n; },
                        [](const DivideConquer& x) { return (1 << x.n) - 1; },
                        [](const Bidirectional& x) {
                          return (x.s + 1) * (1 << (x.n - x.s)) - 1;
                        },
                        [](const QRam& x) { return x.index_qubits + x.value_qubits; },
                        [](const Entangled& x) {
                          int w = 0;
                          for (const auto& c : x.components) w += register_width(c);
                          return w;
                        },
                    },
                    d.v);
}

std::vector<std::string> check_parameters(const EncodingDescriptor& d) {
  std::vector<std::string> out;
  auto positive = [&](const char* what, int v) {
    if (v < 1) out.push_back(std::string(what) + " must be positive");
  };
  std::visit(overloaded{
                 [&](const Basis& x) { positive("m", x.m); },
                 [&](const MappedBasis& x) {
                   positive("m", x.m);
                   if (x.m >= 1 && x.m < 31 && x.domain.size() != (std::size_t{1} << x.m))
                     out.push_back("mapping table must have 2^m entries");
                   std::set<double> seen(x.domain.begin(), x.domain.end());
                   if (seen.size() != x.domain.size())
                     out.push_back("mapping is not a bijection (repeated domain value)");
                 },
                 [&](const Angle& x) { positive("N", x.N); },
                 [&](const Fourier& x) { positive("m", x.m); },
                 [&](const MultiRegister& x) {
                   positive("m", x.m);
                   positive("N", x.N);
                 },
                 [&](const EquallyWeighted& x) { positive("m", x.m); },
                 [&](const Amplitude& x) { positive("n", x.n); },
                 [&](const DivideConquer& x) {
                   positive("n", x.n);
                   if (x.n > 8) out.push_back("divide_conquer n must be at most 8");
                 },
                 [&](const Bidirectional& x) {
                   positive("n", x.n);
                   if (x.s < 1 || x.s > x.n) out.push_back("split level must satisfy 1 <= s <= n");
                 },
                 [&](const QRam& x) {
                   positive("index_qubits", x.index_qubits);
                   positive("value_qubits", x.value_qubits);
                 },
                 [&](const Entangled& x) {
                   if (x.components.empty()) out.push_back("entangled needs components");
                   for (const auto& c : x.components)
                     for (auto& e : check_parameters(c)) out.push_back(e);
                 },
             },
             d.v);
  return out;
}

nlohmann::json to_json(const EncodingDescriptor& d) {
  nlohmann::json j;
  j["variant"] = variant_name(d);
  std::visit(overloaded{
                 [&](const Basis& x) { j["m"] = x.m; },
                 [&](const MappedBasis& x) {
                   j["m"] = x.m;
                   j["domain"] = x.domain;
                 },
                 [&](const Angle& x) { j["N"] = x.N; },
                 [&](const Fourier& x) { j["m"] = x.m; },
                 [&](const MultiRegister& x) {
                   j["m"] = x.m;
                   j["N"] = x.N;
                 },
                 [&](const EquallyWeighted& x) { j["m"] = x.m; },
                 [&](const Amplitude& x) { j["n"] = x.n; },
                 [&](const DivideConquer& x) { j["n"] = x.n; },
                 [&](const Bidirectional& x) {
                   j["n"] = x.n;
                   j["s"] = x.s;
                 },
                 [&](const QRam& x) {
                   j["index_qubits"] = x.index_qubits;
                   j["value_qubits"] = x.value_qubits;
                 },
                 [&](const Entangled& x) {
                   j["joint"] = x.joint;
                   j["components"] = nlohmann::json::array();
                   for (const auto& c : x.components) j["components"].push_back(to_json(c));
                 },
             },
             d.v);
  return j;
}

EncodingDescriptor descriptor_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("variant"))
    throw ArgumentError("descriptor JSON needs a \"variant\" field");
  const std::string v = j.at("variant").get<std::string>();
  auto get = [&](const char* k) { return j.at(k).get<int>(); };
  if (v == "basis") return Basis{get("m")};
  if (v == "mapped_basis") return MappedBasis{get("m"), j.at("domain").get<std::vector<double>>()};
  if (v == "angle") return Angle{get("N")};
  if (v == "fourier") return Fourier{get("m")};
  if (v == "multi_register") return MultiRegister{get("m"), get("N")};
  if (v == "equally_weighted") return EquallyWeighted{get("m")};
  if (v == "amplitude") return Amplitude{get("n")};
  if (v == "divide_conquer") return DivideConquer{get("n")};
  if (v == "bidirectional") return Bidirectional{get("n"), get("s")};
  if (v == "qram") return QRam{get("index_qubits"), get("value_qubits")};
  if (v == "entangled") {
    Entangled e;
    e.joint = j.value("joint", false);
    for (const auto& c : j.at("components")) e.components.push_back(descriptor_from_json(c));
    return e;
  }
  throw ArgumentError("unknown encoding variant '" + v + "'");
}

}  // namespace enqode
