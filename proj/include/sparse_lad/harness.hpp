#pragma once

// Seeded Monte-Carlo runner.
//
// Every trial owns two private streams (input and noise) derived from
// (master_seed, trial_index), and every configured filter within a trial is
// stepped on the same (regressor, desired) pair. Per-trial squared
// deviations are summed in trial-index order, so results do not depend on
// how many worker threads ran the trials.

#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

#include "sparse_lad/filters.hpp"
#include "sparse_lad/metrics.hpp"
#include "sparse_lad/random.hpp"
#include "sparse_lad/scenarios.hpp"
#include "sparse_lad/signals.hpp"

namespace sparse_lad {

struct TrialOptions {
  /// Record weights every `history_stride` iterations; 0 records none.
  /// Squared deviations are always kept for every iteration.
  std::uint64_t history_stride = 0;
};

struct AlgorithmTrace {
  /// ||w(n+1) - w_o(n)||^2: weights after consuming sample n against the
  /// system that produced it. +inf from the divergence point on.
  std::vector<double> squared_deviation;
  /// Weights after iterations 0, stride, 2 * stride, ...
  std::vector<std::vector<double>> weights;
  bool diverged = false;
  std::uint64_t diverged_at = 0;
};

struct TrialResult {
  std::vector<AlgorithmTrace> traces;
};

/// Runs one trial on caller-supplied streams. A filter whose deviation stops
/// being finite is marked diverged and no longer stepped.
template <UniformSource R>
TrialResult run_trial_with(const ScenarioConfig& config, R& input_rng, R& noise_rng,
                           const TrialOptions& options = {}) {
  config.validate();
  const auto& trajectory = config.trajectory;
  const std::size_t taps = trajectory.taps();
  const std::uint64_t total = trajectory.total_iterations();
  const NoiseModel noise = config.noise.resolved(config.input.stationary_power());

  std::vector<FilterState> filters(config.algorithms.size(), FilterState(taps));
  TrialResult result;
  result.traces.resize(config.algorithms.size());
  for (auto& trace : result.traces) {
    trace.squared_deviation.resize(total);
    if (options.history_stride > 0) {
      trace.weights.reserve((total + options.history_stride - 1) / options.history_stride);
    }
  }

  RegressorWindow window(taps);
  double previous = 0.0;
  for (std::uint64_t n = 0; n < total; ++n) {
    previous = next_input(config.input, previous, input_rng);
    window.push(previous);
    const auto truth = trajectory.true_weights_at(n);
    const auto x = window.view();
    double clean = 0.0;
    for (std::size_t m = 0; m < taps; ++m) clean += truth[m] * x[m];
    const double desired = clean + noise.sample(noise_rng);
    const bool record = options.history_stride > 0 && n % options.history_stride == 0;

    for (std::size_t a = 0; a < filters.size(); ++a) {
      auto& trace = result.traces[a];
      if (!trace.diverged) {
        step(filters[a], config.algorithms[a].params, x, desired);
        const double dev = squared_deviation(filters[a].weights(), truth);
        if (std::isfinite(dev)) {
          trace.squared_deviation[n] = dev;
        } else {
          trace.diverged = true;
          trace.diverged_at = n;
        }
      }
      if (trace.diverged) trace.squared_deviation[n] = std::numeric_limits<double>::infinity();
      if (record) {
        const auto w = filters[a].weights();
        trace.weights.emplace_back(w.begin(), w.end());
      }
    }
  }
  return result;
}

TrialResult run_trial(const ScenarioConfig& config, const TrialSeed& seed,
                      const TrialOptions& options = {});

/// How trials with a non-finite deviation enter the average.
struct DivergencePolicy {
  enum class Mode { Exclude, Cap };
  Mode mode = Mode::Exclude;
  /// Value substituted for non-finite deviations in Cap mode.
  double cap_value = 1e6;
};

struct ExperimentResult {
  ScenarioConfig config;
  std::uint64_t master_seed = 0;
  DivergencePolicy policy;
  /// One series per configured algorithm, in config order.
  std::vector<MsdSeries> series;
  double wall_seconds = 0.0;
  unsigned parallelism = 1;
};

using ProgressCallback = std::function<void(std::uint64_t done, std::uint64_t total)>;

/// OpenMP over trials with `parallelism` threads (0 selects the OpenMP
/// default). Output is bit-identical to run_experiment_serial.
ExperimentResult run_experiment(const ScenarioConfig& config, std::uint64_t master_seed,
                                unsigned parallelism, const DivergencePolicy& policy = {},
                                const ProgressCallback& progress = {});

/// Single-threaded reference.
ExperimentResult run_experiment_serial(const ScenarioConfig& config, std::uint64_t master_seed,
                                       const DivergencePolicy& policy = {});

}  // namespace sparse_lad
