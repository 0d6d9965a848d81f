// enqode: data set import
// Copyright 2026 The enqode Authors.
// SPDX-License-Identifier: Apache-2.0
#include "enqode/encodings/io.hpp"

#include <fstream>
#include <sstream>

#include "enqode/errors.hpp"

namespace enqode {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_number(const std::string& s, std::size_t line) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || trim(s.substr(used)) != "")
    throw ArgumentError("line " + std::to_string(line) + ": '" + s + "' is not a number");
  return v;
}

nlohmann::json value_json(const cplx& v) {
  if (v.imag() == 0.0) return v.real();
  return nlohmann::json::array({v.real(), v.imag()});
}

std::string kind_name(DataKind k) {
  switch (k) {
    case DataKind::Integers: return "integers";
    case DataKind::Reals: return "reals";
    case DataKind::ComplexVector: return "complex";
    case DataKind::ProbabilityVector: return "probabilities";
  }
  return "reals";
}

DataKind kind_from_name(const std::string& s) {
  if (s == "integers") return DataKind::Integers;
  if (s == "reals") return DataKind::Reals;
  if (s == "complex") return DataKind::ComplexVector;
  if (s == "probabilities") return DataKind::ProbabilityVector;
  throw ArgumentError("unknown data kind '" + s + "'");
}

}  // namespace

std::vector<cplx> parse_csv_values(const std::string& text) {
  std::vector<cplx> out;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      out.emplace_back(parse_number(line, lineno), 0.0);
    } else {
      out.emplace_back(parse_number(trim(line.substr(0, comma)), lineno),
                       parse_number(trim(line.substr(comma + 1)), lineno));
    }
  }
  return out;
}

std::vector<cplx> parse_json_values(const nlohmann::json& j) {
  if (!j.is_array()) throw ArgumentError("expected a JSON array of values");
  std::vector<cplx> out;
  for (const auto& v : j) {
    if (v.is_number()) {
      out.emplace_back(v.get<double>(), 0.0);
    } else if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
      out.emplace_back(v[0].get<double>(), v[1].get<double>());
    } else {
      throw ArgumentError("JSON value " + v.dump() + " is neither a number nor [re, im]");
    }
  }
  return out;
}

std::vector<cplx> read_values_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ArgumentError("cannot open data file '" + path + "'");
  std::stringstream buf;
  buf << f.rdbuf();
  const bool json = path.size() >= 5 && path.substr(path.size() - 5) == ".json";
  if (json) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(buf.str());
    } catch (const nlohmann::json::parse_error& e) {
      throw ArgumentError("'" + path + "': " + e.what());
    }
    if (j.is_object() && j.contains("values")) return parse_json_values(j["values"]);
    return parse_json_values(j);
  }
  return parse_csv_values(buf.str());
}

nlohmann::json to_json(const DataSet& d) {
  nlohmann::json j;
  j["kind"] = kind_name(d.kind);
  j["values"] = nlohmann::json::array();
  for (const auto& v : d.values) j["values"].push_back(value_json(v));
  if (!d.weights.empty()) {
    j["weights"] = nlohmann::json::array();
    for (const auto& v : d.weights) j["weights"].push_back(value_json(v));
  }
  if (!d.parts.empty()) {
    j["parts"] = nlohmann::json::array();
    for (const auto& p : d.parts) j["parts"].push_back(to_json(p));
  }
  return j;
}

DataSet dataset_from_json(const nlohmann::json& j) {
  DataSet d;
  d.kind = kind_from_name(j.value("kind", std::string("reals")));
  if (j.contains("values")) d.values = parse_json_values(j["values"]);
  if (j.contains("weights")) d.weights = parse_json_values(j["weights"]);
  if (j.contains("parts"))
    for (const auto& p : j["parts"]) d.parts.push_back(dataset_from_json(p));
  return d;
}

}  // namespace enqode
