#pragma once

// Symmetric (and skewed) alpha-stable variates via the Chambers-Mallows-Stuck
// transform, Box-Muller Gaussians, and GSNR-driven scale calibration.
//
// Parameter names follow the experiment description: `location` is a pure
// shift and `scale` is the dispersion-like spread, so that alpha = 2 yields a
// Gaussian with variance 2 * scale^2.

#include <cmath>
#include <optional>

#include "sparse_lad/random.hpp"

namespace sparse_lad {

struct NoiseParams {
  double alpha = 1.2;
  double beta = 0.0;
  double location = 0.0;
  double scale = 1.0;

  void validate() const;
};

struct GsnrSpec {
  double gsnr_db = 10.0;
  double signal_power = 1.0;
};

/// Maps one (V, W) pair, with V uniform on (-pi/2, pi/2) derived from u1 and
/// W = -log(u2) exponential, to a Stable(alpha, beta, scale, location) value.
double stable_from_uniforms(const NoiseParams& params, double u1, double u2);

/// Box-Muller cosine branch: one standard normal from two uniforms.
double standard_normal_from_uniforms(double u1, double u2);

/// Two uniform draws per variate.
template <UniformSource R>
double sample_stable(const NoiseParams& params, R& rng) {
  params.validate();
  const double u1 = rng.uniform_open();
  const double u2 = rng.uniform_open();
  return stable_from_uniforms(params, u1, u2);
}

void require_variance(double variance);

/// Two uniform draws per variate; variance = 0 returns `mean` exactly.
template <UniformSource R>
double sample_gaussian(double mean, double variance, R& rng) {
  require_variance(variance);
  const double u1 = rng.uniform_open();
  const double u2 = rng.uniform_open();
  return mean + std::sqrt(variance) * standard_normal_from_uniforms(u1, u2);
}

/// Scale delta solving 10 log10(signal_power / delta^alpha) = gsnr_db.
double calibrate_scale(const GsnrSpec& spec, double alpha);

enum class NoiseKind { AlphaStable, Gaussian };

/// Additive observation noise of an experiment. When `gsnr_db` is set the
/// spread (stable scale or Gaussian variance) is derived from the input power
/// by `resolved`; otherwise the stored spread is used as is.
struct NoiseModel {
  NoiseKind kind = NoiseKind::AlphaStable;
  NoiseParams stable;
  double gaussian_variance = 1.0;
  std::optional<double> gsnr_db = 10.0;

  void validate() const;
  NoiseModel resolved(double signal_power) const;

  template <UniformSource R>
  double sample(R& rng) const {
    return kind == NoiseKind::AlphaStable ? sample_stable(stable, rng)
                                          : sample_gaussian(0.0, gaussian_variance, rng);
  }
};

}  // namespace sparse_lad
