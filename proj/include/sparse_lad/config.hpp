#pragma once

// JSON run configuration.
//
//   {
//     "scenario": "example2",             base experiment, default example2
//     "trials": 500,
//     "master_seed": 1,
//     "parallelism": 0,                   0 = OpenMP default
//     "output_dir": "out",
//     "trajectory": {"total_iterations": 9000,
//                    "phases": [{"start": 0, "coefficients": [...]}, ...]},
//     "input": {"kind": "white_gaussian" | "ar1", "variance": 1, "ar_coefficient": 0.8},
//     "noise": {"kind": "alpha_stable" | "gaussian", "alpha": 1.2, "beta": 0,
//               "location": 0, "scale": 1, "variance": 1, "gsnr_db": 10 | null},
//     "algorithms": [{"algorithm": "rza_lad", "label": "...", "mu": 5e-3,
//                     "rho": 1.5e-3, "epsilon": 1e-2}],
//     "divergence": {"mode": "exclude" | "cap", "cap_value": 1e6}
//   }
//
// Every section is optional and overrides the base scenario. Algorithm
// entries fall back to default_params() for omitted numbers. Unknown keys are
// rejected.

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "sparse_lad/harness.hpp"
#include "sparse_lad/scenarios.hpp"

namespace sparse_lad {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunOptions {
  std::uint64_t master_seed = 1;
  unsigned parallelism = 0;
  std::string output_dir = "out";
  DivergencePolicy divergence;
};

struct RunConfig {
  ScenarioConfig scenario;
  RunOptions run;
};

/// Throws ConfigError. JSON syntax errors report line and column; validation
/// errors name the offending field.
RunConfig parse_config(std::string_view json_text);
RunConfig parse_config_file(const std::filesystem::path& path);

/// Fully explicit JSON that parse_config maps back to the same RunConfig.
std::string echo_config(const RunConfig& config);

}  // namespace sparse_lad
