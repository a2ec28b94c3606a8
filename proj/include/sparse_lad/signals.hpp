#pragma once

#include <span>
#include <vector>

#include "sparse_lad/noise.hpp"

namespace sparse_lad {

enum class InputKind { WhiteGaussian, AR1 };

/// x(n) = a x(n-1) + u(n) with u ~ N(0, variance); a is ignored for white input.
struct InputSpec {
  InputKind kind = InputKind::WhiteGaussian;
  double variance = 1.0;
  double ar_coefficient = 0.0;

  void validate() const;
  /// Stationary variance of x: variance for white input, variance / (1 - a^2) for AR(1).
  double stationary_power() const;
};

template <UniformSource R>
double next_input(const InputSpec& spec, double previous, R& rng) {
  const double drive = sample_gaussian(0.0, spec.variance, rng);
  if (spec.kind == InputKind::WhiteGaussian) return drive;
  return spec.ar_coefficient * previous + drive;
}

/// Tapped delay line, most recent sample first. Starts all-zero.
class RegressorWindow {
 public:
  explicit RegressorWindow(std::size_t taps);

  void push(double sample);
  std::span<const double> view() const { return buffer_; }
  std::size_t taps() const { return buffer_.size(); }

 private:
  std::vector<double> buffer_;
};

}  // namespace sparse_lad
