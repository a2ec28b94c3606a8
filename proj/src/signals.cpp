#include "sparse_lad/signals.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sparse_lad {

void InputSpec::validate() const {
  if (!(variance > 0.0) || !std::isfinite(variance)) {
    throw std::invalid_argument("input variance must be a finite positive number");
  }
  if (kind == InputKind::AR1 && !(std::abs(ar_coefficient) < 1.0)) {
    throw std::invalid_argument("ar_coefficient must satisfy |a| < 1");
  }
}

double InputSpec::stationary_power() const {
  validate();
  if (kind == InputKind::WhiteGaussian) return variance;
  return variance / (1.0 - ar_coefficient * ar_coefficient);
}

RegressorWindow::RegressorWindow(std::size_t taps) : buffer_(taps, 0.0) {
  if (taps == 0) throw std::invalid_argument("regressor window needs at least one tap");
}

void RegressorWindow::push(double sample) {
  std::shift_right(buffer_.begin(), buffer_.end(), 1);
  buffer_.front() = sample;
}

}  // namespace sparse_lad
