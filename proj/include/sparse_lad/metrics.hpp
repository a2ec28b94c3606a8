#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sparse_lad/filters.hpp"
#include "sparse_lad/scenarios.hpp"

namespace sparse_lad {

/// Trial-averaged mean square deviation per iteration, linear scale.
struct MsdSeries {
  std::string label;
  Algorithm algorithm = Algorithm::LAD;
  std::vector<double> values;
  std::uint64_t trials = 0;
  /// Trials with a non-finite deviation at some iteration.
  std::uint64_t diverged = 0;
};

/// ||estimate - truth||_2^2
double squared_deviation(std::span<const double> estimate, std::span<const double> truth);

/// (1/K) sum_k ||w^(k) - w_o||^2. Throws on an empty list or length mismatch.
double msd(std::span<const std::vector<double>> estimates, std::span<const double> truth);

/// histories[k][n] is trial k's weight vector at iteration n. values[n] is the
/// msd of the K estimates at n against trajectory.true_weights_at(n).
MsdSeries msd_trajectory(std::span<const std::vector<std::vector<double>>> histories,
                         const SystemTrajectory& trajectory);

/// 10 log10(x); zero maps to -infinity.
double to_db(double linear);

/// Mean of values[begin, end).
double window_mean(std::span<const double> values, std::size_t begin, std::size_t end);

}  // namespace sparse_lad
