#include "sparse_lad/metrics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace sparse_lad {

double squared_deviation(std::span<const double> estimate, std::span<const double> truth) {
  if (estimate.size() != truth.size()) {
    throw std::invalid_argument("estimate has " + std::to_string(estimate.size()) +
                                " taps, truth has " + std::to_string(truth.size()));
  }
  double acc = 0.0;
  for (std::size_t m = 0; m < truth.size(); ++m) {
    const double d = estimate[m] - truth[m];
    acc += d * d;
  }
  return acc;
}

double msd(std::span<const std::vector<double>> estimates, std::span<const double> truth) {
  if (estimates.empty()) throw std::invalid_argument("msd of an empty trial list");
  double sum = 0.0;
  for (const auto& w : estimates) sum += squared_deviation(w, truth);
  return sum / static_cast<double>(estimates.size());
}

MsdSeries msd_trajectory(std::span<const std::vector<std::vector<double>>> histories,
                         const SystemTrajectory& trajectory) {
  if (histories.empty()) throw std::invalid_argument("msd of an empty trial list");
  const std::size_t length = histories.front().size();
  for (const auto& h : histories) {
    if (h.size() != length) throw std::invalid_argument("weight histories differ in length");
  }
  MsdSeries series;
  series.trials = histories.size();
  series.values.resize(length);
  std::vector<std::vector<double>> at_n(histories.size());
  for (std::size_t n = 0; n < length; ++n) {
    for (std::size_t k = 0; k < histories.size(); ++k) at_n[k] = histories[k][n];
    series.values[n] = msd(at_n, trajectory.true_weights_at(n));
  }
  return series;
}

double to_db(double linear) {
  if (linear == 0.0) return -std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(linear);
}

double window_mean(std::span<const double> values, std::size_t begin, std::size_t end) {
  if (begin >= end || end > values.size()) throw std::invalid_argument("bad averaging window");
  double acc = 0.0;
  for (std::size_t i = begin; i < end; ++i) acc += values[i];
  return acc / static_cast<double>(end - begin);
}

}  // namespace sparse_lad
