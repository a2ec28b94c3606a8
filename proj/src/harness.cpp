#include "sparse_lad/harness.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <stdexcept>

#include <omp.h>

namespace sparse_lad {

namespace {

// Trial-ordered running sums. Feeding trials 0, 1, 2, ... in sequence is the
// only way results are produced, whatever ran the trials.
class TrialAccumulator {
 public:
  TrialAccumulator(const ScenarioConfig& config, const DivergencePolicy& policy)
      : policy_(policy),
        sums_(config.algorithms.size(),
              std::vector<double>(config.trajectory.total_iterations(), 0.0)),
        included_(config.algorithms.size(), 0),
        diverged_(config.algorithms.size(), 0) {
    if (policy.mode == DivergencePolicy::Mode::Cap && !std::isfinite(policy.cap_value)) {
      throw std::invalid_argument("divergence cap must be finite");
    }
  }

  void add(const TrialResult& trial) {
    for (std::size_t a = 0; a < sums_.size(); ++a) {
      const auto& trace = trial.traces[a];
      auto& sum = sums_[a];
      if (trace.diverged) {
        ++diverged_[a];
        if (policy_.mode == DivergencePolicy::Mode::Exclude) continue;
      }
      ++included_[a];
      for (std::size_t n = 0; n < sum.size(); ++n) {
        const double v = trace.squared_deviation[n];
        sum[n] += std::isfinite(v) ? v : policy_.cap_value;
      }
    }
  }

  std::vector<MsdSeries> finish(const ScenarioConfig& config, std::uint64_t trials) {
    std::vector<MsdSeries> out(sums_.size());
    for (std::size_t a = 0; a < sums_.size(); ++a) {
      out[a].label = config.algorithms[a].label;
      out[a].algorithm = config.algorithms[a].params.algorithm;
      out[a].trials = trials;
      out[a].diverged = diverged_[a];
      out[a].values = std::move(sums_[a]);
      if (included_[a] == 0) {
        std::fill(out[a].values.begin(), out[a].values.end(),
                  std::numeric_limits<double>::infinity());
        continue;
      }
      const auto k = static_cast<double>(included_[a]);
      for (double& v : out[a].values) v /= k;
    }
    return out;
  }

 private:
  DivergencePolicy policy_;
  std::vector<std::vector<double>> sums_;
  std::vector<std::uint64_t> included_;
  std::vector<std::uint64_t> diverged_;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

TrialResult run_trial(const ScenarioConfig& config, const TrialSeed& seed,
                      const TrialOptions& options) {
  RandomStream input = make_stream(seed, StreamId::Input);
  RandomStream noise = make_stream(seed, StreamId::Noise);
  return run_trial_with(config, input, noise, options);
}

ExperimentResult run_experiment(const ScenarioConfig& config, std::uint64_t master_seed,
                                unsigned parallelism, const DivergencePolicy& policy,
                                const ProgressCallback& progress) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();
  const int threads = parallelism == 0 ? omp_get_max_threads() : static_cast<int>(parallelism);

  TrialAccumulator acc(config, policy);
  // Slots bound memory to one batch of histories; batch size has no effect
  // on the result because slots are drained in trial order.
  const std::uint64_t batch = std::max<std::uint64_t>(16, 4 * static_cast<std::uint64_t>(threads));
  std::vector<TrialResult> slots;
  std::vector<std::exception_ptr> errors;

  for (std::uint64_t first = 0; first < config.trials; first += batch) {
    const auto count = static_cast<std::int64_t>(std::min(batch, config.trials - first));
    slots.assign(static_cast<std::size_t>(count), TrialResult{});
    errors.assign(static_cast<std::size_t>(count), nullptr);

#pragma omp parallel for num_threads(threads) schedule(dynamic, 1)
    for (std::int64_t i = 0; i < count; ++i) {
      try {
        slots[static_cast<std::size_t>(i)] =
            run_trial(config, TrialSeed{master_seed, first + static_cast<std::uint64_t>(i)});
      } catch (...) {
        errors[static_cast<std::size_t>(i)] = std::current_exception();
      }
    }

    for (std::size_t i = 0; i < slots.size(); ++i) {
      if (errors[i]) std::rethrow_exception(errors[i]);
      acc.add(slots[i]);
    }
    if (progress) progress(first + static_cast<std::uint64_t>(count), config.trials);
  }

  ExperimentResult result{config, master_seed, policy, acc.finish(config, config.trials),
                          seconds_since(start), static_cast<unsigned>(threads)};
  return result;
}

ExperimentResult run_experiment_serial(const ScenarioConfig& config, std::uint64_t master_seed,
                                       const DivergencePolicy& policy) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();
  TrialAccumulator acc(config, policy);
  for (std::uint64_t k = 0; k < config.trials; ++k) {
    acc.add(run_trial(config, TrialSeed{master_seed, k}));
  }
  return ExperimentResult{config, master_seed, policy, acc.finish(config, config.trials),
                          seconds_since(start), 1};
}

}  // namespace sparse_lad
