#include "sparse_lad/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>

namespace sparse_lad {

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

void write_csv(const ExperimentResult& result, std::ostream& out) {
  const auto& trajectory = result.config.trajectory;
  std::vector<std::size_t> order(result.series.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return result.series[a].label < result.series[b].label;
  });

  out << kCsvHeader << '\n';
  std::string row;
  for (std::size_t a : order) {
    const auto& series = result.series[a];
    for (std::size_t n = 0; n < series.values.size(); ++n) {
      const double v = series.values[n];
      row.clear();
      row += std::to_string(n);
      row += ',';
      row += series.label;
      row += ',';
      row += format_double(v);
      row += ',';
      row += format_double(to_db(v));
      row += ',';
      row += std::to_string(trajectory.phase_index_at(n));
      row += '\n';
      out << row;
    }
  }
}

void emit_csv(const ExperimentResult& result, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  write_csv(result, out);
  out.flush();
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

double steady_state_msd(const MsdSeries& series, const SystemTrajectory& trajectory,
                        std::size_t phase, double fraction) {
  const auto [begin, end] = trajectory.phase_range(phase);
  const auto length = end - begin;
  const auto tail = std::max<std::uint64_t>(
      1, static_cast<std::uint64_t>(std::floor(static_cast<double>(length) * fraction)));
  return window_mean(series.values, end - tail, end);
}

std::string summarize(const ExperimentResult& result) {
  const auto& config = result.config;
  const auto& trajectory = config.trajectory;
  const std::size_t phases = trajectory.phases().size();
  std::ostringstream out;
  char line[256];

  std::snprintf(line, sizeof line,
                "scenario %s: %llu trials, %llu iterations, master seed %llu, "
                "%u worker(s), wall time %.2f s\n",
                config.name.c_str(), static_cast<unsigned long long>(config.trials),
                static_cast<unsigned long long>(trajectory.total_iterations()),
                static_cast<unsigned long long>(result.master_seed), result.parallelism,
                result.wall_seconds);
  out << line;
  out << "steady state = mean MSD over the final 10% of each phase\n";

  std::vector<std::vector<double>> steady(result.series.size(), std::vector<double>(phases));
  for (std::size_t a = 0; a < result.series.size(); ++a) {
    const auto& s = result.series[a];
    std::snprintf(line, sizeof line, "\nalgorithm %s (%s), diverged trials: %llu/%llu\n",
                  s.label.c_str(), std::string(to_string(s.algorithm)).c_str(),
                  static_cast<unsigned long long>(s.diverged),
                  static_cast<unsigned long long>(s.trials));
    out << line;
    for (std::size_t k = 0; k < phases; ++k) {
      const auto [begin, end] = trajectory.phase_range(k);
      steady[a][k] = steady_state_msd(s, trajectory, k);
      std::snprintf(line, sizeof line,
                    "  phase %zu [%llu, %llu): steady-state MSD %.2f dB (%s)\n", k + 1,
                    static_cast<unsigned long long>(begin), static_cast<unsigned long long>(end),
                    to_db(steady[a][k]),
                    format_double(steady[a][k]).c_str());
      out << line;
    }
  }

  out << "\nsteady-state ordering (lowest first)\n";
  for (std::size_t k = 0; k < phases; ++k) {
    std::vector<std::size_t> order(result.series.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return steady[a][k] < steady[b][k]; });
    out << "  phase " << k + 1 << ": ";
    for (std::size_t i = 0; i < order.size(); ++i) {
      out << (i ? " < " : "") << result.series[order[i]].label;
    }
    out << "  [minimum: " << result.series[order.front()].label << "]\n";
  }
  return out.str();
}

}  // namespace sparse_lad
