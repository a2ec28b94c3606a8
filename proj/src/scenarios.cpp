#include "sparse_lad/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <stdexcept>

namespace sparse_lad {

namespace {

constexpr std::size_t kExampleTaps = 16;
// 1-based tap 5.
constexpr std::size_t kInitialTap = 4;

std::vector<AlgorithmEntry> entries_for(std::initializer_list<Algorithm> algorithms) {
  std::vector<AlgorithmEntry> out;
  for (Algorithm a : algorithms) out.push_back({std::string(to_string(a)), default_params(a)});
  return out;
}

}  // namespace

SystemTrajectory::SystemTrajectory(std::vector<Phase> phases, std::uint64_t total_iterations)
    : phases_(std::move(phases)), total_iterations_(total_iterations) {
  if (phases_.empty()) throw std::invalid_argument("trajectory needs at least one phase");
  if (phases_.front().start_iteration != 0) {
    throw std::invalid_argument("first phase must start at iteration 0");
  }
  const std::size_t m = phases_.front().coefficients.size();
  if (m == 0) throw std::invalid_argument("trajectory needs at least one tap");
  for (std::size_t k = 0; k < phases_.size(); ++k) {
    const auto& phase = phases_[k];
    if (phase.coefficients.size() != m) {
      throw std::invalid_argument("phase " + std::to_string(k) + " has " +
                                  std::to_string(phase.coefficients.size()) +
                                  " coefficients, expected " + std::to_string(m));
    }
    for (double c : phase.coefficients) {
      if (!std::isfinite(c)) throw std::invalid_argument("non-finite true coefficient");
    }
    if (k > 0 && phase.start_iteration <= phases_[k - 1].start_iteration) {
      throw std::invalid_argument("phase start iterations must be strictly increasing");
    }
  }
  if (phases_.back().start_iteration >= total_iterations_) {
    throw std::invalid_argument("every phase must start before total_iterations");
  }
}

std::size_t SystemTrajectory::phase_index_at(std::uint64_t n) const {
  if (n >= total_iterations_) {
    throw std::invalid_argument("iteration " + std::to_string(n) + " outside trajectory of " +
                                std::to_string(total_iterations_) + " iterations");
  }
  auto it = std::upper_bound(phases_.begin(), phases_.end(), n,
                             [](std::uint64_t v, const Phase& p) { return v < p.start_iteration; });
  return static_cast<std::size_t>(std::distance(phases_.begin(), it)) - 1;
}

std::span<const double> SystemTrajectory::true_weights_at(std::uint64_t n) const {
  return phases_[phase_index_at(n)].coefficients;
}

std::pair<std::uint64_t, std::uint64_t> SystemTrajectory::phase_range(std::size_t k) const {
  if (k >= phases_.size()) throw std::invalid_argument("phase index out of range");
  const std::uint64_t end =
      k + 1 < phases_.size() ? phases_[k + 1].start_iteration : total_iterations_;
  return {phases_[k].start_iteration, end};
}

void ScenarioConfig::validate() const {
  input.validate();
  noise.validate();
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");
  if (algorithms.empty()) throw std::invalid_argument("algorithms must not be empty");
  std::set<std::string> labels;
  for (const auto& entry : algorithms) {
    if (entry.label.empty()) throw std::invalid_argument("algorithm label must not be empty");
    if (!labels.insert(entry.label).second) {
      throw std::invalid_argument("duplicate algorithm label '" + entry.label + "'");
    }
    entry.params.validate();
  }
}

std::string_view to_string(ExampleId id) {
  switch (id) {
    case ExampleId::EX1: return "example1";
    case ExampleId::EX2: return "example2";
    case ExampleId::EX3: return "example3";
  }
  throw std::invalid_argument("unknown example id");
}

ExampleId parse_example(std::string_view name) {
  for (ExampleId id : {ExampleId::EX1, ExampleId::EX2, ExampleId::EX3}) {
    if (to_string(id) == name) return id;
  }
  throw std::invalid_argument("unknown scenario '" + std::string(name) +
                              "' (expected example1, example2 or example3)");
}

std::string epsilon_label(double epsilon) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "rza_lad_eps%g", epsilon);
  return buf;
}

SystemTrajectory make_switching_trajectory(std::uint64_t first_switch,
                                           std::uint64_t second_switch,
                                           std::uint64_t total_iterations) {
  std::vector<double> sparse(kExampleTaps, 0.0);
  sparse[kInitialTap] = 1.0;

  // Odd taps in 1-based numbering are even storage indices.
  std::vector<double> half(kExampleTaps, 0.0);
  std::vector<double> dense(kExampleTaps, 0.0);
  for (std::size_t i = 0; i < kExampleTaps; ++i) {
    half[i] = i % 2 == 0 ? 1.0 : 0.0;
    dense[i] = i % 2 == 0 ? 1.0 : -1.0;
  }
  return SystemTrajectory({{0, sparse}, {first_switch, half}, {second_switch, dense}},
                          total_iterations);
}

ScenarioConfig make_example(ExampleId id) {
  NoiseModel noise;
  noise.kind = NoiseKind::AlphaStable;
  noise.stable = NoiseParams{1.2, 0.0, 0.0, 1.0};
  noise.gsnr_db = 10.0;

  switch (id) {
    case ExampleId::EX1: {
      std::vector<double> w(kExampleTaps, 0.0);
      w[kInitialTap] = 1.0;
      auto algorithms = entries_for({Algorithm::LAD, Algorithm::ZA_LAD});
      for (double eps : kEpsilonSweep) {
        FilterParams p = default_params(Algorithm::RZA_LAD);
        p.epsilon = eps;
        algorithms.push_back({epsilon_label(eps), p});
      }
      return ScenarioConfig{"example1", SystemTrajectory({{0, w}}, 3000),
                            InputSpec{InputKind::WhiteGaussian, 1.0, 0.0}, noise, 500,
                            std::move(algorithms)};
    }
    case ExampleId::EX2:
      return ScenarioConfig{"example2", make_switching_trajectory(3000, 6000, 9000),
                            InputSpec{InputKind::WhiteGaussian, 1.0, 0.0}, noise, 500,
                            entries_for({Algorithm::LAD, Algorithm::ZA_LAD, Algorithm::RZA_LAD,
                                         Algorithm::LMS, Algorithm::ZA_LMS,
                                         Algorithm::RZA_LMS})};
    case ExampleId::EX3:
      return ScenarioConfig{"example3", make_switching_trajectory(20000, 40000, 60000),
                            InputSpec{InputKind::AR1, 1.0, 0.8}, noise, 500,
                            entries_for({Algorithm::LAD, Algorithm::ZA_LAD, Algorithm::RZA_LAD,
                                         Algorithm::LMS, Algorithm::ZA_LMS,
                                         Algorithm::RZA_LMS})};
  }
  throw std::invalid_argument("unknown example id");
}

}  // namespace sparse_lad
