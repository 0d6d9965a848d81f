// enqode: command-line driver
// Copyright 2026 The enqode Authors.
// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <complex>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "enqode/converters/converters.hpp"
#include "enqode/encodings/io.hpp"
#include "enqode/errors.hpp"
#include "enqode/loaders/loaders.hpp"
#include "enqode/pipeline/executor.hpp"
#include "enqode/pipeline/typecheck.hpp"
#include "enqode/qmc/qmc.hpp"
#include "enqode/sim/rng.hpp"
#include "enqode/sim/simulator.hpp"

using namespace enqode;
namespace fs = std::filesystem;

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kRuntimeError = 2;

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw ArgumentError("cannot open " + p.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_output(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw ArgumentError("cannot write " + out);
  f << text;
}

bool is_csv(const std::string& path) { return fs::path(path).extension() == ".csv"; }

std::vector<double> csv_reals(const std::string& path) {
  std::vector<double> out;
  for (const auto& z : read_values_file(path)) out.push_back(z.real());
  return out;
}

DiscreteDistribution load_distribution(const std::string& path) {
  if (is_csv(path)) return DiscreteDistribution::on_indices(csv_reals(path));
  return distribution_from_json(nlohmann::json::parse(read_file(path)));
}

FunctionTable load_function(const std::string& path) {
  if (is_csv(path)) {
    const auto v = csv_reals(path);
    int n = 0;
    while ((std::size_t{1} << n) < v.size()) ++n;
    return FunctionTable::amplitude(n, v);
  }
  return function_from_json(nlohmann::json::parse(read_file(path)));
}

int cmd_check(const std::string& file) {
  const auto spec = parse_pipeline(read_file(file));
  const auto r = typecheck(spec, fs::path(file).parent_path());
  if (!r.ok()) {
    for (const auto& e : r.errors) std::cerr << file << ": " << e.message << "\n";
    return kInputError;
  }
  for (std::size_t i = 0; i < spec.steps.size(); ++i) {
    const auto& s = spec.steps[i];
    const auto& t = r.steps[i];
    std::cout << i << "  " << to_string(s.kind) << " " << s.name << "  ->  "
              << (t.out ? to_string(*t.out) : t.result) << "\n";
  }
  std::cout << "ok\n";
  return kOk;
}

int cmd_run(const std::string& file, std::uint64_t seed, const std::string& out, bool timing) {
  const auto spec = parse_pipeline(read_file(file));
  ExecOptions opts;
  opts.base_dir = fs::path(file).parent_path();
  opts.timing = timing;
  const auto report = execute(spec, seed, opts);
  write_output(report.dump(2) + "\n", out);
  return kOk;
}

int cmd_qft(int m, bool verify) {
  const auto c = qft_circuit(m);
  const auto metrics = c.metrics();
  nlohmann::json j{{"m", m}, {"width", metrics.width}, {"depth", metrics.depth}, {"gates", metrics.gate_count}};
  int rc = kOk;
  if (verify) {
    if (m > 10) throw CapacityError("--verify builds the full matrix; use m <= 10");
    const auto u = circuit_matrix(c);
    const std::size_t N = std::size_t{1} << m;
    double worst = 0.0;
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t k = 0; k < N; ++k) {
        const double phase = 2.0 * std::numbers::pi * static_cast<double>((r * k) % N) / static_cast<double>(N);
        const cplx dft = std::polar(1.0 / std::sqrt(static_cast<double>(N)), phase);
        worst = std::max(worst, std::abs(u[r][k] - dft));
      }
    j["max_abs_error"] = worst;
    j["verified"] = worst <= 1e-10;
    if (worst > 1e-10) rc = kRuntimeError;
  }
  std::cout << j.dump(2) << "\n";
  return rc;
}

int cmd_qmc(const std::string& dist, const std::string& fn, int m, std::uint64_t shots, std::uint64_t seed,
            const std::vector<double>& eps) {
  const auto x = load_distribution(dist);
  const auto f = load_function(fn);
  nlohmann::json j = to_json(qmc_expectation(x, f, m, shots, seed));
  if (!eps.empty()) {
    j["complexity"] = nlohmann::json::array();
    for (const auto& row : complexity_report(x, f, eps)) j["complexity"].push_back(to_json(row));
  }
  std::cout << j.dump(2) << "\n";
  return kOk;
}

int cmd_scaling(const std::string& loader, int n_max, const std::string& csv, std::uint64_t seed) {
  if (loader != "amplitude" && loader != "divide_conquer" && loader != "bidirectional")
    throw ArgumentError("--loader must be amplitude, divide_conquer or bidirectional");
  if (n_max < 1 || n_max > 12) throw SizeError("--n-max must be in 1..12");
  std::ostringstream os;
  os << "encoding,n,s,width,depth,cnots\n";
  nlohmann::json rows = nlohmann::json::array();
  auto emit = [&](int n, int s, const ResourceReport& r) {
    os << loader << ',' << n << ',' << s << ',' << r.width << ',' << r.depth << ',' << r.cnot_count << '\n';
    rows.push_back({{"encoding", loader}, {"n", n}, {"s", s}, {"width", r.width}, {"depth", r.depth},
                    {"cnots", r.cnot_count}});
  };
  for (int n = 1; n <= n_max; ++n) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(n)));
    std::vector<double> a(std::size_t{1} << n);
    double s2 = 0.0;
    for (auto& v : a) {
      v = rng.uniform() + 0.01;
      s2 += v * v;
    }
    for (auto& v : a) v /= std::sqrt(s2);
    if (loader == "amplitude") {
      emit(n, 0, load_amplitude(std::span<const double>(a)).report);
    } else if (loader == "divide_conquer") {
      emit(n, 0, load_divide_conquer(a).report);
    } else {
      for (int s = 1; s <= n; ++s) emit(n, s, load_bidirectional(a, s).report);
    }
  }
  if (csv.empty()) {
    for (const auto& r : rows) std::cout << r.dump() << "\n";
  } else {
    write_output(os.str(), csv);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"enqode: quantum data-encoding simulator"};
  app.require_subcommand(1);

  std::string file, out, csv, dist, fn, loader = "amplitude";
  std::uint64_t seed = 0, shots = 1;
  bool timing = false, verify = false;
  int m = 4, n_max = 10;
  std::vector<double> eps;

  auto* check = app.add_subcommand("check", "parse and type-check a pipeline");
  check->add_option("file", file, "pipeline file")->required();

  auto* run = app.add_subcommand("run", "execute a pipeline and print its JSON report");
  run->add_option("file", file, "pipeline file")->required();
  run->add_option("--seed", seed, "random seed");
  run->add_option("--out", out, "write the report here instead of stdout");
  run->add_flag("--timing", timing, "add wall time to the report");

  auto* qft = app.add_subcommand("qft", "QFT circuit resources");
  qft->add_option("--m", m, "qubits")->required();
  qft->add_flag("--verify", verify, "compare the circuit matrix with the DFT");

  auto* qmc = app.add_subcommand("qmc", "quantum Monte Carlo estimate of E[f(X)]");
  qmc->add_option("--dist", dist, "distribution (JSON or CSV)")->required();
  qmc->add_option("--f", fn, "function (JSON or CSV)")->required();
  qmc->add_option("--m", m, "precision qubits");
  qmc->add_option("--shots", shots, "QAE repetitions");
  qmc->add_option("--seed", seed, "random seed");
  qmc->add_option("--eps", eps, "target errors for a complexity table");

  auto* scaling = app.add_subcommand("scaling", "loader resource rows over n");
  scaling->add_option("--loader", loader, "amplitude | divide_conquer | bidirectional");
  scaling->add_option("--n-max", n_max, "largest n");
  scaling->add_option("--csv", csv, "write CSV here instead of JSON rows on stdout");
  scaling->add_option("--seed", seed, "data seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }

  try {
    if (*check) return cmd_check(file);
    if (*run) return cmd_run(file, seed, out, timing);
    if (*qft) return cmd_qft(m, verify);
    if (*qmc) return cmd_qmc(dist, fn, m, shots, seed, eps);
    if (*scaling) return cmd_scaling(loader, n_max, csv, seed);
  } catch (const ParseError& e) {
    std::cerr << file << ":" << e.what() << "\n";
    return kInputError;
  } catch (const PipelineTypeError& e) {
    std::cerr << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kRuntimeError;
  }
  return kRuntimeError;
}
