#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sparse_lad/filters.hpp"
#include "sparse_lad/noise.hpp"
#include "sparse_lad/signals.hpp"

namespace sparse_lad {

struct Phase {
  std::uint64_t start_iteration = 0;
  std::vector<double> coefficients;
};

/// Piecewise-constant true system w_o(n). Phase k is active on
/// [start_k, start_{k+1}); the last phase runs to total_iterations.
class SystemTrajectory {
 public:
  SystemTrajectory(std::vector<Phase> phases, std::uint64_t total_iterations);

  std::size_t taps() const { return phases_.front().coefficients.size(); }
  std::uint64_t total_iterations() const { return total_iterations_; }
  const std::vector<Phase>& phases() const { return phases_; }

  /// Throws std::invalid_argument when n >= total_iterations.
  std::span<const double> true_weights_at(std::uint64_t n) const;
  std::size_t phase_index_at(std::uint64_t n) const;
  /// Half-open iteration range [begin, end) of phase k.
  std::pair<std::uint64_t, std::uint64_t> phase_range(std::size_t k) const;

 private:
  std::vector<Phase> phases_;
  std::uint64_t total_iterations_;
};

/// One filter run inside an experiment. Labels name the CSV rows and must be
/// unique within a config.
struct AlgorithmEntry {
  std::string label;
  FilterParams params;
};

struct ScenarioConfig {
  std::string name;
  SystemTrajectory trajectory;
  InputSpec input;
  NoiseModel noise;
  std::uint64_t trials = 500;
  std::vector<AlgorithmEntry> algorithms;

  void validate() const;
};

enum class ExampleId { EX1, EX2, EX3 };

std::string_view to_string(ExampleId id);
ExampleId parse_example(std::string_view name);

/// Reweighting constants swept by the time-invariant example.
inline constexpr double kEpsilonSweep[] = {1e-3, 1e-2, 1e-1, 1.0, 10.0};

/// Label for an RZA-LAD entry of the epsilon sweep, e.g. "rza_lad_eps0.01".
std::string epsilon_label(double epsilon);

/// Builds one of the three reference experiments with 500 trials, alpha = 1.2
/// symmetric stable noise at 10 dB GSNR and the default filter parameters.
///   EX1: 16 taps, tap 5 = 1, 3000 iterations; LAD, ZA-LAD and RZA-LAD over
///        the epsilon sweep.
///   EX2: switches at 3000 / 6000 (1, 8, 16 nonzero taps), 9000 iterations,
///        white Gaussian input, all six algorithms.
///   EX3: as EX2 with switches at 20000 / 40000, 60000 iterations and
///        AR(1) input with a = 0.8.
ScenarioConfig make_example(ExampleId id);

/// The 1 -> 8 -> 16 nonzero-tap schedule with the given switch points.
SystemTrajectory make_switching_trajectory(std::uint64_t first_switch,
                                           std::uint64_t second_switch,
                                           std::uint64_t total_iterations);

}  // namespace sparse_lad
