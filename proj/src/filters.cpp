#include "sparse_lad/filters.hpp"

#include <cmath>
#include <stdexcept>

namespace sparse_lad {

namespace {

void require_same_length(std::size_t taps, std::size_t regressor) {
  if (taps != regressor) {
    throw std::invalid_argument("regressor length " + std::to_string(regressor) +
                                " does not match filter length " + std::to_string(taps));
  }
}

void require_epsilon(double epsilon) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw std::invalid_argument("epsilon must be a finite positive number");
  }
}

enum class ErrorMap { Sign, Linear };
enum class Attractor { None, Plain, Reweighted };

template <ErrorMap Map, Attractor Attr>
StepRecord update(FilterState& state, const FilterParams& params,
                  std::span<const double> regressor, double desired) {
  require_same_length(state.taps(), regressor.size());
  StepRecord record;
  record.output = predict(state, regressor);
  record.error = desired - record.output;

  double gain = 0.0;
  if constexpr (Map == ErrorMap::Sign) {
    gain = params.mu * sgn(record.error);
  } else {
    gain = params.mu * record.error;
  }

  auto w = state.weights();
  for (std::size_t m = 0; m < w.size(); ++m) {
    const double old = w[m];
    double next = old + gain * regressor[m];
    if constexpr (Attr == Attractor::Plain) {
      next -= params.rho * sgn(old);
    } else if constexpr (Attr == Attractor::Reweighted) {
      next -= params.rho * (sgn(old) / (1.0 + params.epsilon * std::abs(old)));
    }
    w[m] = next;
  }
  state.advance();
  return record;
}

double inner(std::span<const double> a, std::span<const double> b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

}  // namespace

std::string_view to_string(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::LAD: return "lad";
    case Algorithm::ZA_LAD: return "za_lad";
    case Algorithm::RZA_LAD: return "rza_lad";
    case Algorithm::LMS: return "lms";
    case Algorithm::ZA_LMS: return "za_lms";
    case Algorithm::RZA_LMS: return "rza_lms";
  }
  throw std::invalid_argument("unknown algorithm tag " +
                              std::to_string(static_cast<int>(algorithm)));
}

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  for (Algorithm a : kAllAlgorithms) {
    if (to_string(a) == name) return a;
  }
  return std::nullopt;
}

bool is_lad_family(Algorithm algorithm) {
  return algorithm == Algorithm::LAD || algorithm == Algorithm::ZA_LAD ||
         algorithm == Algorithm::RZA_LAD;
}

bool uses_reweighting(Algorithm algorithm) {
  return algorithm == Algorithm::RZA_LAD || algorithm == Algorithm::RZA_LMS;
}

bool has_attractor(Algorithm algorithm) {
  return algorithm != Algorithm::LAD && algorithm != Algorithm::LMS;
}

void FilterParams::validate() const {
  (void)to_string(algorithm);
  if (!(mu > 0.0) || !std::isfinite(mu)) {
    throw std::invalid_argument("mu must be a finite positive number");
  }
  if (!(rho >= 0.0) || !std::isfinite(rho)) {
    throw std::invalid_argument("rho must be a finite non-negative number");
  }
  require_epsilon(epsilon);
}

FilterParams default_params(Algorithm algorithm) {
  FilterParams p;
  p.algorithm = algorithm;
  p.mu = 5e-3;
  p.epsilon = 1e-2;
  if (uses_reweighting(algorithm)) {
    p.rho = 1.5e-3;
  } else if (has_attractor(algorithm)) {
    p.rho = 1.5e-4;
  }
  return p;
}

FilterState::FilterState(std::size_t taps) : weights_(taps, 0.0) {
  if (taps == 0) throw std::invalid_argument("filter needs at least one tap");
}

FilterState::FilterState(std::vector<double> initial_weights)
    : weights_(std::move(initial_weights)) {
  if (weights_.empty()) throw std::invalid_argument("filter needs at least one tap");
}

double sgn(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("sgn of a non-finite value");
  if (x > 0.0) return 1.0;
  if (x < 0.0) return -1.0;
  return 0.0;
}

double predict(const FilterState& state, std::span<const double> regressor) {
  require_same_length(state.taps(), regressor.size());
  return inner(state.weights(), regressor);
}

std::vector<double> reweight_vector(std::span<const double> weights, double epsilon) {
  require_epsilon(epsilon);
  std::vector<double> g(weights.size());
  for (std::size_t m = 0; m < weights.size(); ++m) {
    g[m] = sgn(weights[m]) / (1.0 + epsilon * std::abs(weights[m]));
  }
  return g;
}

StepRecord step_lad(FilterState& state, const FilterParams& params,
                    std::span<const double> regressor, double desired) {
  return update<ErrorMap::Sign, Attractor::None>(state, params, regressor, desired);
}

StepRecord step_za_lad(FilterState& state, const FilterParams& params,
                       std::span<const double> regressor, double desired) {
  return update<ErrorMap::Sign, Attractor::Plain>(state, params, regressor, desired);
}

StepRecord step_rza_lad(FilterState& state, const FilterParams& params,
                        std::span<const double> regressor, double desired) {
  return update<ErrorMap::Sign, Attractor::Reweighted>(state, params, regressor, desired);
}

StepRecord step_lms(FilterState& state, const FilterParams& params,
                    std::span<const double> regressor, double desired) {
  return update<ErrorMap::Linear, Attractor::None>(state, params, regressor, desired);
}

StepRecord step_za_lms(FilterState& state, const FilterParams& params,
                       std::span<const double> regressor, double desired) {
  return update<ErrorMap::Linear, Attractor::Plain>(state, params, regressor, desired);
}

StepRecord step_rza_lms(FilterState& state, const FilterParams& params,
                        std::span<const double> regressor, double desired) {
  return update<ErrorMap::Linear, Attractor::Reweighted>(state, params, regressor, desired);
}

StepRecord step(FilterState& state, const FilterParams& params,
                std::span<const double> regressor, double desired) {
  switch (params.algorithm) {
    case Algorithm::LAD: return step_lad(state, params, regressor, desired);
    case Algorithm::ZA_LAD: return step_za_lad(state, params, regressor, desired);
    case Algorithm::RZA_LAD: return step_rza_lad(state, params, regressor, desired);
    case Algorithm::LMS: return step_lms(state, params, regressor, desired);
    case Algorithm::ZA_LMS: return step_za_lms(state, params, regressor, desired);
    case Algorithm::RZA_LMS: return step_rza_lms(state, params, regressor, desired);
  }
  throw std::invalid_argument("unknown algorithm tag " +
                              std::to_string(static_cast<int>(params.algorithm)));
}

double lad_cost(std::span<const double> weights, std::span<const double> regressor,
                double desired) {
  require_same_length(weights.size(), regressor.size());
  return std::abs(desired - inner(weights, regressor));
}

double za_lad_cost(std::span<const double> weights, std::span<const double> regressor,
                   double desired, double penalty_weight) {
  double l1 = 0.0;
  for (double w : weights) l1 += std::abs(w);
  return lad_cost(weights, regressor, desired) + penalty_weight * l1;
}

double rza_lad_cost(std::span<const double> weights, std::span<const double> regressor,
                    double desired, double penalty_weight, double epsilon) {
  require_epsilon(epsilon);
  double log_sum = 0.0;
  for (double w : weights) log_sum += std::log1p(epsilon * std::abs(w));
  return lad_cost(weights, regressor, desired) + penalty_weight * log_sum;
}

std::vector<double> lad_subgradient(std::span<const double> weights,
                                    std::span<const double> regressor, double desired) {
  require_same_length(weights.size(), regressor.size());
  const double s = sgn(desired - inner(weights, regressor));
  std::vector<double> grad(weights.size());
  for (std::size_t m = 0; m < grad.size(); ++m) grad[m] = -s * regressor[m];
  return grad;
}

std::vector<double> za_lad_subgradient(std::span<const double> weights,
                                       std::span<const double> regressor, double desired,
                                       double penalty_weight) {
  auto grad = lad_subgradient(weights, regressor, desired);
  for (std::size_t m = 0; m < grad.size(); ++m) grad[m] += penalty_weight * sgn(weights[m]);
  return grad;
}

std::vector<double> rza_lad_subgradient(std::span<const double> weights,
                                        std::span<const double> regressor, double desired,
                                        double penalty_weight, double epsilon) {
  auto grad = lad_subgradient(weights, regressor, desired);
  const auto g = reweight_vector(weights, epsilon);
  for (std::size_t m = 0; m < grad.size(); ++m) grad[m] += penalty_weight * epsilon * g[m];
  return grad;
}

}  // namespace sparse_lad
