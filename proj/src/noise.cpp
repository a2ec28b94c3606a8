#include "sparse_lad/noise.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sparse_lad {

void NoiseParams::validate() const {
  if (!(alpha > 0.0 && alpha <= 2.0)) {
    throw std::invalid_argument("alpha must lie in (0, 2]");
  }
  if (!(beta >= -1.0 && beta <= 1.0)) {
    throw std::invalid_argument("beta must lie in [-1, 1]");
  }
  if (!std::isfinite(location)) {
    throw std::invalid_argument("location must be finite");
  }
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw std::invalid_argument("scale must be a finite positive number");
  }
}

double stable_from_uniforms(const NoiseParams& p, double u1, double u2) {
  using std::numbers::pi;
  const double v = pi * (u1 - 0.5);
  const double w = -std::log(u2);

  double x = 0.0;
  double drift = 0.0;
  if (p.alpha == 1.0) {
    const double half_pi = 0.5 * pi;
    const double bv = half_pi + p.beta * v;
    x = (bv * std::tan(v) - p.beta * std::log(half_pi * w * std::cos(v) / bv)) / half_pi;
    drift = p.beta * p.scale * std::log(p.scale) / half_pi;
  } else if (p.beta == 0.0) {
    x = std::sin(p.alpha * v) / std::pow(std::cos(v), 1.0 / p.alpha) *
        std::pow(std::cos(v - p.alpha * v) / w, (1.0 - p.alpha) / p.alpha);
  } else {
    const double t = p.beta * std::tan(0.5 * pi * p.alpha);
    const double shift = std::atan(t) / p.alpha;
    const double stretch = std::pow(1.0 + t * t, 0.5 / p.alpha);
    const double a = p.alpha * (v + shift);
    x = stretch * std::sin(a) / std::pow(std::cos(v), 1.0 / p.alpha) *
        std::pow(std::cos(v - a) / w, (1.0 - p.alpha) / p.alpha);
  }
  return (p.scale * x + drift) + p.location;
}

double standard_normal_from_uniforms(double u1, double u2) {
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

void require_variance(double variance) {
  if (!(variance >= 0.0) || !std::isfinite(variance)) {
    throw std::invalid_argument("variance must be a finite non-negative number");
  }
}

double calibrate_scale(const GsnrSpec& spec, double alpha) {
  if (!(alpha > 0.0 && alpha <= 2.0)) {
    throw std::invalid_argument("alpha must lie in (0, 2]");
  }
  if (!std::isfinite(spec.gsnr_db)) {
    throw std::invalid_argument("gsnr_db must be finite");
  }
  if (!(spec.signal_power > 0.0) || !std::isfinite(spec.signal_power)) {
    throw std::invalid_argument("signal_power must be a finite positive number");
  }
  const double dispersion = spec.signal_power / std::pow(10.0, spec.gsnr_db / 10.0);
  return std::pow(dispersion, 1.0 / alpha);
}

void NoiseModel::validate() const {
  if (gsnr_db && !std::isfinite(*gsnr_db)) {
    throw std::invalid_argument("gsnr_db must be finite");
  }
  switch (kind) {
    case NoiseKind::AlphaStable:
      stable.validate();
      break;
    case NoiseKind::Gaussian:
      require_variance(gaussian_variance);
      break;
  }
}

NoiseModel NoiseModel::resolved(double signal_power) const {
  validate();
  NoiseModel out = *this;
  if (!gsnr_db) return out;
  if (!(signal_power > 0.0) || !std::isfinite(signal_power)) {
    throw std::invalid_argument("signal_power must be a finite positive number");
  }
  const GsnrSpec spec{*gsnr_db, signal_power};
  if (kind == NoiseKind::AlphaStable) {
    out.stable.scale = calibrate_scale(spec, stable.alpha);
  } else {
    // Ordinary SNR for Gaussian noise.
    out.gaussian_variance = signal_power / std::pow(10.0, *gsnr_db / 10.0);
  }
  out.gsnr_db.reset();
  return out;
}

}  // namespace sparse_lad
