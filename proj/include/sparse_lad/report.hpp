#pragma once

#include <filesystem>
#include <ostream>
#include <stdexcept>
#include <string>

#include "sparse_lad/harness.hpp"

namespace sparse_lad {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::string_view kCsvHeader = "iteration,algorithm,msd_linear,msd_db,phase_index";

/// Same digits as printf("%.17g"); infinities print as `inf` / `-inf`.
std::string format_double(double value);

/// Rows sorted by (label, iteration), LF line endings, msd_db = 10 log10(msd_linear).
void write_csv(const ExperimentResult& result, std::ostream& out);

/// Throws IoError carrying the path on failure.
void emit_csv(const ExperimentResult& result, const std::filesystem::path& path);

/// Mean MSD over the last `fraction` of phase k (at least one iteration).
double steady_state_msd(const MsdSeries& series, const SystemTrajectory& trajectory,
                        std::size_t phase, double fraction = 0.1);

/// Human-readable report: per algorithm and phase, the steady-state MSD and
/// diverged-trial count, then the per-phase ordering.
std::string summarize(const ExperimentResult& result);

}  // namespace sparse_lad
