#include <gtest/gtest.h>

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "sparse_lad/config.hpp"
#include "sparse_lad/report.hpp"

using namespace sparse_lad;

namespace {

std::string error_of(std::string_view json) {
  try {
    parse_config(json);
  } catch (const ConfigError& e) {
    return e.what();
  }
  return {};
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  for (std::string cell; std::getline(in, cell, ',');) out.push_back(cell);
  return out;
}

ScenarioConfig tiny(std::uint64_t iterations, std::initializer_list<Algorithm> algorithms) {
  auto cfg = make_example(ExampleId::EX2);
  cfg.trajectory = make_switching_trajectory(iterations / 3, 2 * iterations / 3, iterations);
  cfg.trials = 2;
  cfg.algorithms.clear();
  for (Algorithm a : algorithms) cfg.algorithms.push_back({std::string(to_string(a)), default_params(a)});
  return cfg;
}

}  // namespace

TEST(ParseConfig, ScenarioDefaultsFromParameterTable) {
  const auto c = parse_config(R"({"scenario":"example2"})");
  EXPECT_EQ(c.scenario.name, "example2");
  EXPECT_EQ(c.scenario.trajectory.total_iterations(), 9000u);
  ASSERT_EQ(c.scenario.algorithms.size(), 6u);
  for (const auto& a : c.scenario.algorithms) {
    EXPECT_EQ(a.params.mu, 5e-3);
    if (a.params.algorithm == Algorithm::ZA_LAD) EXPECT_EQ(a.params.rho, 1.5e-4);
    if (a.params.algorithm == Algorithm::RZA_LAD) {
      EXPECT_EQ(a.params.rho, 1.5e-3);
      EXPECT_EQ(a.params.epsilon, 1e-2);
    }
  }
}

TEST(ParseConfig, AlgorithmEntriesFillOmittedParameters) {
  const auto c = parse_config(
      R"({"scenario":"example1","algorithms":[{"algorithm":"rza_lad","epsilon":10,"label":"r10"},
                                               {"algorithm":"za_lms"}]})");
  ASSERT_EQ(c.scenario.algorithms.size(), 2u);
  EXPECT_EQ(c.scenario.algorithms[0].label, "r10");
  EXPECT_EQ(c.scenario.algorithms[0].params.epsilon, 10.0);
  EXPECT_EQ(c.scenario.algorithms[0].params.rho, 1.5e-3);
  EXPECT_EQ(c.scenario.algorithms[1].label, "za_lms");
  EXPECT_EQ(c.scenario.algorithms[1].params.rho, 1.5e-4);
}

TEST(ParseConfig, NamedFieldValidationErrors) {
  EXPECT_NE(error_of(R"({"algorithms":[{"algorithm":"lad","mu":-1}]})").find("mu"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"algorithms":[{"algorithm":"rza_lad","epsilon":0}]})").find("epsilon"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"trials":0})").find("trials"), std::string::npos);
  EXPECT_NE(error_of(R"({"input":{"kind":"ar1","ar_coefficient":1.0}})").find("input"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"noise":{"alpha":2.5}})").find("alpha"), std::string::npos);
  EXPECT_NE(error_of(R"({"noise":{"scale":1,"gsnr_db":10}})").find("gsnr_db"), std::string::npos);
  EXPECT_NE(error_of(R"({"algorithms":[{"algorithm":"nlms"}]})").find("nlms"), std::string::npos);
  EXPECT_NE(error_of(R"({"algorithms":[{"algorithm":"lad"},{"algorithm":"lad"}]})")
                .find("duplicate"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"scenario":"example9"})").find("scenario"), std::string::npos);
  EXPECT_NE(error_of(R"({"trials":"many"})").find("trials"), std::string::npos);
}

TEST(ParseConfig, UnknownKeysRejected) {
  EXPECT_NE(error_of(R"({"trails":3})").find("trails"), std::string::npos);
  EXPECT_NE(error_of(R"({"noise":{"alpah":1.2}})").find("noise.alpah"), std::string::npos);
  EXPECT_NE(error_of(R"({"algorithms":[{"algorithm":"lad","step":1}]})").find("step"),
            std::string::npos);
}

TEST(ParseConfig, MalformedJsonReportsLineAndColumn) {
  const auto msg = error_of("{\n  \"trials\": 3,\n  oops\n}");
  EXPECT_NE(msg.find("line 3"), std::string::npos) << msg;
  EXPECT_NE(msg.find("column"), std::string::npos) << msg;
}

TEST(ParseConfig, CustomTrajectoryAndNoise) {
  const auto c = parse_config(R"({
    "trajectory": {"total_iterations": 10,
                   "phases": [{"start": 0, "coefficients": [1, 0]},
                              {"start": 4, "coefficients": [0, 1]}]},
    "noise": {"kind": "gaussian", "variance": 0},
    "input": {"kind": "ar1", "ar_coefficient": 0.5},
    "divergence": {"mode": "cap", "cap_value": 50},
    "master_seed": 18446744073709551615, "parallelism": 3, "output_dir": "x"})");
  EXPECT_EQ(c.scenario.trajectory.taps(), 2u);
  EXPECT_EQ(c.scenario.trajectory.phase_index_at(4), 1u);
  EXPECT_EQ(c.scenario.noise.kind, NoiseKind::Gaussian);
  EXPECT_FALSE(c.scenario.noise.gsnr_db.has_value());
  EXPECT_EQ(c.scenario.input.kind, InputKind::AR1);
  EXPECT_EQ(c.run.divergence.mode, DivergencePolicy::Mode::Cap);
  EXPECT_EQ(c.run.divergence.cap_value, 50.0);
  EXPECT_EQ(c.run.master_seed, 18446744073709551615ull);
  EXPECT_EQ(c.run.parallelism, 3u);
  EXPECT_EQ(c.run.output_dir, "x");
  EXPECT_NE(error_of(R"({"trajectory":{"total_iterations":10,"phases":[{"start":2,"coefficients":[1]}]}})")
                .find("trajectory"),
            std::string::npos);
}

TEST(EchoConfig, ReparsesToSameConfig) {
  for (const char* text : {R"({"scenario":"example1","master_seed":5})",
                           R"({"scenario":"example3","noise":{"scale":0.3},"trials":7})",
                           R"({"noise":{"kind":"gaussian","variance":0.25},"divergence":{"mode":"cap"}})"}) {
    const auto first = echo_config(parse_config(text));
    EXPECT_EQ(echo_config(parse_config(first)), first);
  }
}

TEST(Csv, HeaderAndZeroDeviationRow) {
  auto cfg = tiny(3, {Algorithm::LAD});
  cfg.trajectory = SystemTrajectory({{0, std::vector<double>(16, 0.0)}}, 1);
  ExperimentResult r{cfg, 1, {}, {MsdSeries{"lad", Algorithm::LAD, {0.0}, 1, 0}}, 0.0, 1};
  std::ostringstream out;
  write_csv(r, out);
  EXPECT_EQ(out.str(), "iteration,algorithm,msd_linear,msd_db,phase_index\n0,lad,0,-inf,0\n");
}

TEST(Csv, SortedRowsAndUnitBaseline) {
  const auto cfg = tiny(9, {Algorithm::ZA_LAD, Algorithm::LAD});
  ExperimentResult r{cfg, 1, {}, {}, 0.0, 1};
  for (const auto& a : cfg.algorithms) {
    MsdSeries s{a.label, a.params.algorithm, std::vector<double>(9), 2, 0};
    for (std::size_t n = 0; n < 9; ++n) {
      s.values[n] = squared_deviation(std::vector<double>(16, 0.0), cfg.trajectory.true_weights_at(n));
    }
    r.series.push_back(s);
  }
  std::ostringstream out;
  write_csv(r, out);
  const auto lines = lines_of(out.str());
  ASSERT_EQ(lines.size(), 1 + 9 * 2u);
  EXPECT_EQ(lines[1], "0,lad,1,0,0");
  EXPECT_EQ(lines[4], "3,lad,8,9.0308998699194358,1");
  EXPECT_EQ(split(lines[10])[1], "za_lad");
  EXPECT_EQ(out.str().find('\r'), std::string::npos);
}

TEST(Csv, RoundTripsLinearValuesBitExactly) {
  const auto cfg = tiny(60, {Algorithm::LAD, Algorithm::RZA_LAD});
  const auto result = run_experiment(cfg, 77, 1);
  std::ostringstream out;
  write_csv(result, out);
  const auto lines = lines_of(out.str());
  std::size_t row = 1;
  for (std::size_t a : {0u, 1u}) {  // "lad" < "rza_lad"
    for (double expected : result.series[a].values) {
      const auto cells = split(lines.at(row++));
      double parsed = 0.0;
      std::from_chars(cells[2].data(), cells[2].data() + cells[2].size(), parsed);
      ASSERT_EQ(parsed, expected);
    }
  }
}

TEST(Csv, EmitReportsPathOnFailure) {
  const auto cfg = tiny(3, {Algorithm::LAD});
  ExperimentResult r{cfg, 1, {}, {MsdSeries{"lad", Algorithm::LAD, {1, 1, 1}, 1, 0}}, 0.0, 1};
  try {
    emit_csv(r, "/nonexistent-dir/out.csv");
    FAIL() << "expected IoError";
  } catch (const IoError& e) {
    EXPECT_NE(std::string(e.what()).find("/nonexistent-dir/out.csv"), std::string::npos);
  }
}

TEST(FormatDouble, SeventeenSignificantDigits) {
  EXPECT_EQ(format_double(0.1), "0.10000000000000001");
  EXPECT_EQ(format_double(1.0), "1");
  EXPECT_EQ(format_double(-std::numeric_limits<double>::infinity()), "-inf");
}

TEST(Summarize, PhaseBlocksDivergenceAndOrdering) {
  auto cfg = tiny(300, {Algorithm::LAD, Algorithm::ZA_LAD, Algorithm::RZA_LAD, Algorithm::LMS});
  cfg.trials = 6;
  const auto result = run_experiment(cfg, 9, 1);
  const auto text = summarize(result);

  for (const auto& a : cfg.algorithms) {
    EXPECT_NE(text.find("algorithm " + a.label + " "), std::string::npos);
  }
  std::size_t blocks = 0;
  for (std::size_t pos = 0; (pos = text.find("  phase ", pos)) != std::string::npos; ++pos) ++blocks;
  EXPECT_EQ(blocks, 3 * cfg.algorithms.size() + 3);
  EXPECT_NE(text.find("diverged trials: 0/6"), std::string::npos);

  // The flagged minimum of phase 1 matches an independent computation.
  std::size_t best = 0;
  for (std::size_t a = 1; a < result.series.size(); ++a) {
    if (window_mean(result.series[a].values, 90, 100) < window_mean(result.series[best].values, 90, 100)) {
      best = a;
    }
  }
  const auto phase1 = text.substr(text.find("  phase 1: "));
  EXPECT_NE(phase1.find("[minimum: " + result.series[best].label + "]"), std::string::npos);
}

TEST(SteadyState, FinalTenPercentOfPhase) {
  const auto t = make_switching_trajectory(100, 200, 300);
  MsdSeries s{"x", Algorithm::LAD, std::vector<double>(300, 0.0), 1, 0};
  for (std::size_t n = 90; n < 100; ++n) s.values[n] = 2.0;
  EXPECT_EQ(steady_state_msd(s, t, 0), 2.0);
  EXPECT_EQ(steady_state_msd(s, t, 1), 0.0);
}
