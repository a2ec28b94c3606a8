#pragma once

// Sign-error (LAD) and LMS adaptive filters with plain and reweighted
// zero attractors.
//
// All six update rules share one shape:
//
//   w(n+1) = w(n) + mu * f(e(n)) * x(n) - rho * a(w(n))
//
// where f(e) is sgn(e) for the LAD family and e for the LMS family, and the
// attractor a(w) is zero, sgn(w), or the reweighted sgn(w) / (1 + eps |w|).
// Both terms are evaluated at w(n).

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sparse_lad {

enum class Algorithm : std::uint8_t {
  LAD,
  ZA_LAD,
  RZA_LAD,
  LMS,
  ZA_LMS,
  RZA_LMS,
};

inline constexpr Algorithm kAllAlgorithms[] = {
    Algorithm::LAD, Algorithm::ZA_LAD, Algorithm::RZA_LAD,
    Algorithm::LMS, Algorithm::ZA_LMS, Algorithm::RZA_LMS,
};

/// Lower-case identifier used in configs and CSV output ("lad", "za_lad", ...).
std::string_view to_string(Algorithm algorithm);
std::optional<Algorithm> parse_algorithm(std::string_view name);

bool is_lad_family(Algorithm algorithm);
bool uses_reweighting(Algorithm algorithm);
bool has_attractor(Algorithm algorithm);

/// Per-instance tuning. `rho` is the combined attractor gain: mu * alpha for
/// the l1 attractor, mu * alpha * epsilon for the log-sum attractor.
struct FilterParams {
  Algorithm algorithm = Algorithm::LAD;
  double mu = 5e-3;
  double rho = 0.0;
  double epsilon = 1e-2;

  /// Throws std::invalid_argument naming the offending field.
  void validate() const;
};

/// Table-of-parameters defaults used throughout the experiments:
/// mu = 5e-3, rho = 1.5e-4 (l1 attractor) or 1.5e-3 (log-sum), epsilon = 1e-2.
FilterParams default_params(Algorithm algorithm);

class FilterState {
 public:
  explicit FilterState(std::size_t taps);
  explicit FilterState(std::vector<double> initial_weights);

  std::size_t taps() const { return weights_.size(); }
  std::span<const double> weights() const { return weights_; }
  std::span<double> weights() { return weights_; }
  std::uint64_t iteration() const { return iteration_; }
  void advance() { ++iteration_; }

 private:
  std::vector<double> weights_;
  std::uint64_t iteration_ = 0;
};

struct StepRecord {
  double output = 0.0;
  double error = 0.0;
};

/// Sign with sgn(0) = 0. Throws std::invalid_argument on NaN or infinity.
double sgn(double x);

double predict(const FilterState& state, std::span<const double> regressor);

/// g_m = sgn(w_m) / (1 + epsilon |w_m|).
std::vector<double> reweight_vector(std::span<const double> weights, double epsilon);

StepRecord step_lad(FilterState& state, const FilterParams& params,
                    std::span<const double> regressor, double desired);
StepRecord step_za_lad(FilterState& state, const FilterParams& params,
                       std::span<const double> regressor, double desired);
StepRecord step_rza_lad(FilterState& state, const FilterParams& params,
                        std::span<const double> regressor, double desired);
StepRecord step_lms(FilterState& state, const FilterParams& params,
                    std::span<const double> regressor, double desired);
StepRecord step_za_lms(FilterState& state, const FilterParams& params,
                       std::span<const double> regressor, double desired);
StepRecord step_rza_lms(FilterState& state, const FilterParams& params,
                        std::span<const double> regressor, double desired);

/// Dispatches on params.algorithm.
StepRecord step(FilterState& state, const FilterParams& params,
                std::span<const double> regressor, double desired);

// Instantaneous cost functions of the LAD family and their subgradients.
// The updates above are w - mu * subgradient with rho = mu * penalty_weight
// (l1) or rho = mu * penalty_weight * epsilon (log-sum).

double lad_cost(std::span<const double> weights, std::span<const double> regressor,
                double desired);
double za_lad_cost(std::span<const double> weights, std::span<const double> regressor,
                   double desired, double penalty_weight);
double rza_lad_cost(std::span<const double> weights, std::span<const double> regressor,
                    double desired, double penalty_weight, double epsilon);

std::vector<double> lad_subgradient(std::span<const double> weights,
                                    std::span<const double> regressor, double desired);
std::vector<double> za_lad_subgradient(std::span<const double> weights,
                                       std::span<const double> regressor, double desired,
                                       double penalty_weight);
std::vector<double> rza_lad_subgradient(std::span<const double> weights,
                                        std::span<const double> regressor, double desired,
                                        double penalty_weight, double epsilon);

}  // namespace sparse_lad
