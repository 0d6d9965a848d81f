#include <doctest.h>

#include <cmath>

#include "enqode/errors.hpp"
#include "enqode/pipeline/catalog.hpp"
#include "enqode/pipeline/executor.hpp"
#include "enqode/pipeline/typecheck.hpp"
#include "enqode/qmc/qmc.hpp"
#include "pipeline_programs.hpp"
#include "support.hpp"

using namespace enqode;

namespace {

TypecheckResult check_text(const std::string& text) { return typecheck(parse_pipeline(text)); }

}  // namespace

TEST_CASE("parse: minimal program") {
  auto spec = parse_pipeline("load amplitude [0.6, 0.8]; extract qae m=4");
  REQUIRE(spec.steps.size() == 2);
  CHECK(spec.steps[0].kind == StepKind::Load);
  CHECK(spec.steps[0].name == "amplitude");
  CHECK(spec.steps[0].operand->numbers == std::vector<double>{0.6, 0.8});
  CHECK(spec.steps[1].kind == StepKind::Extract);
  CHECK(spec.steps[1].find_param("m")->text == "4");
}

TEST_CASE("parse: errors") {
  try {
    parse_pipeline("load amplitude [1, 0]\nconvert qft");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("pipeline must end with extract") != std::string::npos);
  }
  try {
    parse_pipeline("# data\nload amplitud [1, 0]\nextract qae");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 6);
    CHECK(std::string(e.what()).find("unknown encoding 'amplitud'") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_pipeline("lod basis 3; extract basis_readout"), ParseError);
  CHECK_THROWS_AS(parse_pipeline("extract mode"), ParseError);
  CHECK_THROWS_AS(parse_pipeline(""), ParseError);
  CHECK_THROWS_AS(parse_pipeline("load basis 3; extract mode; extract mode"), ParseError);
  CHECK_THROWS_AS(parse_pipeline("load basis 3; load basis 2; extract mode"), ParseError);
  CHECK_THROWS_AS(parse_pipeline("load basis 3 m=2 m=3; extract mode"), ParseError);
  CHECK_THROWS_AS(parse_pipeline("load basis 3 q=2; extract mode"), ParseError);
  CHECK_THROWS_AS(parse_pipeline("load basis; extract mode"), ParseError);
  CHECK_THROWS_AS(parse_pipeline("load basis 3; apply amplitude_oracle; extract mode"), ParseError);
  CHECK_THROWS_AS(parse_pipeline("load basis 3; convert fft; extract mode"), ParseError);
  CHECK_THROWS_AS(parse_pipeline("load basis [3, 4; extract mode"), ParseError);
}

TEST_CASE("parse/print round trip") {
  const char* programs[] = {
      "pipeline demo\nload amplitude [0.5,-0.5,0.5,0.5] kind=amplitudes\napply amplitude_oracle linear_ramp\n"
      "extract qae m=5 shots=3",
      "load basis 5 m=4; convert qft; convert qft_inverse; extract basis_readout",
      "load qram data.csv value_qubits=3 # comment\nconvert ew_to_amplitude\nextract swap_test with=[1,0] shots=10",
  };
  for (const char* p : programs) {
    const auto spec = parse_pipeline(p);
    const auto again = parse_pipeline(print_pipeline(spec));
    CHECK(again.same_as(spec));
    CHECK(print_pipeline(again) == print_pipeline(spec));
  }
  Rng rng(5);
  for (int t = 0; t < 50; ++t) {
    const auto spec = parse_pipeline(testing::random_program(rng));
    CHECK(parse_pipeline(print_pipeline(spec)).same_as(spec));
  }
}

TEST_CASE("typecheck examples") {
  CHECK(check_text("load amplitude [0.6, 0.8]; extract qae m=4").ok());

  auto qft = check_text("load basis 5; convert qft; extract mode");
  CHECK_FALSE(qft.ok());  // mode does not read Fourier states
  auto qft_ok = check_text("load basis 5; convert qft; convert qft_inverse; extract basis_readout");
  REQUIRE(qft_ok.ok());
  CHECK(qft_ok.steps[1].out->family == "fourier");
  CHECK(qft_ok.steps[1].out->param("m") == 3);

  auto dc = check_text("load divide_conquer [0.5, 0.5, 0.5, 0.5]; extract swap_test with=[1,0,0,0]");
  REQUIRE(dc.errors.size() == 1);
  CHECK(dc.errors[0].step == 1);
  CHECK(dc.errors[0].found.find("divide_conquer") != std::string::npos);
  CHECK(dc.errors[0].expected.find("amplitude") != std::string::npos);
  CHECK(dc.errors[0].message.find("divide_conquer") != std::string::npos);
  CHECK(dc.errors[0].message.find("amplitude") != std::string::npos);

  CHECK_FALSE(check_text("load basis 3; extract qae").ok());
  CHECK(check_text("load divide_conquer [0.5, 0.5, 0.5, 0.5]; extract qae m=3").ok());
  CHECK(check_text("load bidirectional [0.5, 0.5, 0.5, 0.5]; extract naive").ok());

  // Post-selected states have no unitary preparation to amplify.
  auto her = check_text("load qram [1, 2] value_qubits=2; convert ew_to_amplitude; extract qae");
  REQUIRE_FALSE(her.ok());
  CHECK(her.errors[0].found.find("post-selected") != std::string::npos);
  CHECK(check_text("load qram [1, 2] value_qubits=2; convert ew_to_amplitude; extract naive").ok());

  // Operand checks.
  CHECK_FALSE(check_text("load amplitude [1, 0, 0]; extract naive").ok());
  CHECK_FALSE(check_text("load amplitude [0.6, 0.8]; apply amplitude_oracle [0.1, 0.2, 0.3, 0.4]; extract qae").ok());
  CHECK_FALSE(check_text("load amplitude [0.6, 0.8]; apply amplitude_oracle [0.1, 1.5]; extract qae").ok());
  CHECK_FALSE(check_text("load amplitude [0.6, 0.8]; extract swap_test").ok());
  CHECK_FALSE(check_text("load amplitude [0.6, 0.8]; extract swap_test with=[1,0,0,0]").ok());
  CHECK_FALSE(check_text("load basis 2; apply digital_oracle linear_ramp; extract mode").ok());
}

TEST_CASE("typecheck rejects every declared mismatch") {
  const auto mismatches = declared_mismatches();
  CHECK(mismatches.size() >= 11);
  Rng rng(17);
  int checked = 0;
  for (const auto& mm : mismatches) {
    const std::string prefix = testing::producer(mm.family);
    if (prefix.empty()) continue;
    std::string text = prefix + testing::step_text(*mm.step, 2, rng);
    if (mm.step->kind != StepKind::Extract) text += "extract mode\n";
    const auto r = check_text(text);
    REQUIRE_FALSE(r.ok());
    const auto& e = r.errors.front();
    CAPTURE(text);
    CHECK(e.found.find(mm.family) != std::string::npos);
    CHECK(e.message.find(mm.family) != std::string::npos);
    for (const auto& a : mm.step->accepts) CHECK(e.message.find(a) != std::string::npos);
    ++checked;
  }
  CHECK(checked == static_cast<int>(mismatches.size()));
}

TEST_CASE("execute: QFT round trip") {
  auto r = execute(parse_pipeline("load basis 5; convert qft; convert qft_inverse; extract basis_readout"), 1);
  CHECK(r["result"]["value"] == 5);
  CHECK(r["queries"] == 1);
  CHECK(r["steps"].size() == 4);
  CHECK(r["steps"][1]["encoding_out"] == "fourier{m=3}");
  CHECK(r["steps"][1]["width"] == 3);
  CHECK(r["seed"] == 1);
  CHECK_FALSE(r.contains("wall_time_s"));
  CHECK(execute(parse_pipeline("load basis 5; extract mode"), 1, {{}, true}).contains("wall_time_s"));
}

TEST_CASE("execute: QMC pipeline equals qmc_expectation") {
  const std::vector<double> p{0.1, 0.2, 0.3, 0.4};
  const std::vector<double> fv{0.9, 0.15, 0.6, 0.35};
  const auto text = "load amplitude " + testing::array_text(p) + " kind=probabilities\napply amplitude_oracle " +
                    testing::array_text(fv) + "\nextract qae m=5 shots=3\n";
  for (std::uint64_t seed : {0ULL, 7ULL, 12345ULL}) {
    const auto r = execute(parse_pipeline(text), seed);
    const auto q = qmc_expectation(DiscreteDistribution::on_indices(p), FunctionTable::amplitude(2, fv), 5, 3, seed);
    CHECK(r["result"]["estimate"].get<double>() == q.estimate);
    CHECK(r["queries"].get<std::uint64_t>() == q.queries);
  }
  const auto u = execute(parse_pipeline("load amplitude [0.25,0.25,0.25,0.25] kind=probabilities\n"
                                        "apply amplitude_oracle linear_ramp\nextract qae m=4"),
                         3);
  CHECK(std::abs(u["result"]["estimate"].get<double>() - 0.5) < 1e-12);
}

TEST_CASE("execute: naive within 3 sigma") {
  Rng rng(77);
  const auto a = testing::random_real_vector(rng, 8, false);
  double mu = 0.0;
  for (int i = 4; i < 8; ++i) mu += a[i] * a[i];
  const auto r = execute(parse_pipeline("load amplitude " + testing::array_text(a) + "; extract naive shots=10000"), 9);
  const double sigma = std::sqrt(mu * (1 - mu) / 1e4);
  CHECK(std::abs(r["result"]["estimate"].get<double>() - mu) <= 3 * sigma);
  CHECK(r["queries"] == 10000);
}

TEST_CASE("execute: other steps") {
  auto ew = execute(parse_pipeline("load qram [2, 0, 1, 2] value_qubits=2\nconvert ew_to_amplitude\n"
                                   "extract swap_test with=[0.6666666666666666,0,0.3333333333333333,0.6666666666666666] shots=0"),
                    4);
  CHECK(ew["result"]["p0_exact"].get<double>() == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(ew["steps"][1]["attempts"].get<int>() >= 1);
  CHECK(ew["steps"][1]["encoding_out"] == "amplitude{n=2} (post-selected)");

  auto dig = execute(parse_pipeline("load basis 3 m=2; apply digital_oracle square_mod; extract basis_readout"), 1);
  CHECK(dig["result"]["value"] == 1);  // 3^2 mod 4

  auto multi = execute(parse_pipeline("load multi_register [1, 2, 3] m=2; extract basis_readout"), 1);
  CHECK(multi["result"]["registers"] == nlohmann::json::array({1, 2, 3}));

  auto ew_mode = execute(parse_pipeline("load equally_weighted [1, 6] m=3; extract mode shots=101"), 2);
  const auto v = ew_mode["result"]["value"].get<int>();
  CHECK((v == 1 || v == 6));

  CHECK_THROWS_AS(execute(parse_pipeline("load amplitude [0.6, 0.8]; extract basis_readout"), 1), PipelineTypeError);
  try {
    execute(parse_pipeline("load equally_weighted [1, 2] m=2; apply digital_oracle identity; extract basis_readout"), 1);
    FAIL("no error");
  } catch (const ExecutionError& e) {
    CHECK(e.step() == 2);
  }
}

TEST_CASE("fuzz: well-typed programs run") {
  Rng rng(2024);
  int ran = 0;
  for (int t = 0; t < 200; ++t) {
    const auto text = testing::random_program(rng);
    CAPTURE(text);
    const auto spec = parse_pipeline(text);
    REQUIRE(typecheck(spec).ok());
    try {
      const auto r = execute(spec, t);
      CHECK(r.contains("result"));
      ++ran;
    } catch (const ExecutionError& e) {
      // Reading a superposition as a basis state is a data property, not a typing one.
      CHECK(std::string(e.what()).find("not in a basis state") != std::string::npos);
    }
  }
  CHECK(ran >= 150);
}
