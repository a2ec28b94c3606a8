// Acceptance suite. Prints one PASS/FAIL line per criterion, plus INFO lines
// with the measured quantities, and exits nonzero if any criterion fails.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "sparse_lad/harness.hpp"
#include "sparse_lad/report.hpp"
#include "stat_oracles.hpp"

using namespace sparse_lad;
namespace st = sparse_lad::testing;

namespace {

constexpr std::uint64_t kSeed = 20240601;
constexpr std::uint64_t kTrials = 200;
constexpr std::size_t kTail = 500;

int failures = 0;

void verdict(int id, bool ok, const std::string& text) {
  std::printf("%s [%d] %s\n", ok ? "PASS" : "FAIL", id, text.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

void info(int id, const std::string& text) {
  std::printf("INFO [%d] %s\n", id, text.c_str());
  std::fflush(stdout);
}

std::string fmt(const char* pattern, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, pattern, args...);
  return buf;
}

const MsdSeries& series_of(const ExperimentResult& r, std::string_view label) {
  for (const auto& s : r.series) {
    if (s.label == label) return s;
  }
  throw std::runtime_error("missing series " + std::string(label));
}

double tail_db(const ExperimentResult& r, std::string_view label, std::size_t phase) {
  const auto [begin, end] = r.config.trajectory.phase_range(phase);
  return to_db(window_mean(series_of(r, label).values, end - kTail, end));
}

std::string csv_of(const ExperimentResult& r) {
  std::ostringstream out;
  write_csv(r, out);
  return out.str();
}

void subgradients() {
  std::mt19937_64 rng(kSeed);
  std::uniform_real_distribution<double> coef(-2.0, 2.0);
  std::uniform_real_distribution<double> log_weight(-3.0, 0.0);
  std::uniform_real_distribution<double> log_eps(-2.0, 1.0);
  const double h = 1e-7;
  double worst = 0.0;
  int accepted = 0;
  while (accepted < 1000) {
    std::vector<double> w(16), x(16);
    for (auto& v : w) v = coef(rng);
    for (auto& v : x) v = coef(rng);
    const double d = coef(rng);
    bool ok = std::abs(lad_cost(w, x, d)) > 1e-3;
    for (double v : w) ok = ok && std::abs(v) > 1e-3;
    if (!ok) continue;
    ++accepted;
    const double gamma = std::pow(10.0, log_weight(rng));
    const double eps = std::pow(10.0, log_eps(rng));

    auto check = [&](const std::function<double(std::span<const double>)>& cost,
                     const std::vector<double>& analytic) {
      std::vector<double> probe = w;
      double diff = 0.0, scale = 0.0;
      for (std::size_t m = 0; m < w.size(); ++m) {
        probe[m] = w[m] + h;
        const double up = cost(probe);
        probe[m] = w[m] - h;
        const double down = cost(probe);
        probe[m] = w[m];
        const double fd = (up - down) / (2.0 * h);
        diff = std::max(diff, std::abs(fd - analytic[m]));
        scale = std::max(scale, std::abs(analytic[m]));
      }
      worst = std::max(worst, diff / scale);
    };
    check([&](std::span<const double> v) { return za_lad_cost(v, x, d, gamma); },
          za_lad_subgradient(w, x, d, gamma));
    check([&](std::span<const double> v) { return rza_lad_cost(v, x, d, gamma, eps); },
          rza_lad_subgradient(w, x, d, gamma, eps));
  }
  verdict(1, worst <= 1e-6,
          fmt("subgradients vs central differences, 1000 triples: max relative error %.3g (limit 1e-6)",
              worst));
}

void za_rza_limit() {
  auto cfg = make_example(ExampleId::EX1);
  const double rho = 1.5e-3;
  cfg.algorithms = {{"za_lad", {Algorithm::ZA_LAD, 5e-3, rho, 1e-2}},
                    {"rza_lad", {Algorithm::RZA_LAD, 5e-3, rho, 1e-12}}};
  const auto r = run_trial(cfg, {kSeed, 0}, {1});
  double worst = 0.0;
  for (std::size_t n = 0; n < r.traces[0].weights.size(); ++n) {
    for (std::size_t m = 0; m < cfg.trajectory.taps(); ++m) {
      worst = std::max(worst, std::abs(r.traces[0].weights[n][m] - r.traces[1].weights[n][m]));
    }
  }
  verdict(2, worst <= 1e-8 && r.traces[0].weights.size() == 3000,
          fmt("ZA-LAD vs RZA-LAD (eps=1e-12) on example 1, 3000 iterations: max |dw| = %.3g (limit 1e-8)",
              worst));
}

void sampler() {
  RandomStream rng(kSeed);
  const double delta = 0.7;
  std::vector<double> g(1'000'000);
  for (auto& v : g) v = sample_stable(NoiseParams{2.0, 0.0, 0.0, delta}, rng);
  const double d = st::ks_one_sample(g, [&](double v) { return st::normal_cdf(v, 0.0, 2 * delta * delta); });
  const double p = st::ks_p_value(d, static_cast<double>(g.size()));
  verdict(3, p > 0.01, fmt("(a) alpha=2 vs N(0, 2 delta^2), 1e6 samples: D = %.3g, p = %.3f (need > 0.01)", d, p));

  const NoiseParams stable{1.2, 0.0, 0.0, 1.0};
  const std::size_t pairs = 100'000;
  std::vector<double> sums(pairs), reference(pairs);
  const double norm = std::pow(2.0, 1.0 / 1.2);
  for (auto& v : sums) {
    const double a = sample_stable(stable, rng);
    v = (a + sample_stable(stable, rng)) / norm;
  }
  for (auto& v : reference) v = sample_stable(stable, rng);
  const double d2 = st::ks_two_sample(sums, reference);
  const double p2 = st::ks_p_value(d2, st::two_sample_effective_n(pairs, pairs));
  verdict(3, p2 > 0.01,
          fmt("(b) alpha=1.2 stability, 1e5 pairs: D = %.3g, p = %.3f (need > 0.01)", d2, p2));
}

void example2(const ExperimentResult& r) {
  const double lad1 = tail_db(r, "lad", 0), za1 = tail_db(r, "za_lad", 0), rza1 = tail_db(r, "rza_lad", 0);
  const double lad3 = tail_db(r, "lad", 2), za3 = tail_db(r, "za_lad", 2), rza3 = tail_db(r, "rza_lad", 2);
  const double spread3 = std::max({lad3, za3, rza3}) - std::min({lad3, za3, rza3});
  info(4, fmt("phase 1 dB: lad %.2f za_lad %.2f rza_lad %.2f; phase 3 dB: lad %.2f za_lad %.2f rza_lad %.2f",
              lad1, za1, rza1, lad3, za3, rza3));
  const bool phase1 = za1 - rza1 >= 1.0 && lad1 - rza1 >= 1.0;
  verdict(4, phase1 && spread3 <= 3.0,
          fmt("example 2 ordering, %llu trials: phase 1 margins za-rza %.2f dB, lad-rza %.2f dB (need >= 1); "
              "phase 3 spread %.2f dB (need <= 3)",
              static_cast<unsigned long long>(r.series[0].trials), za1 - rza1, lad1 - rza1, spread3));

  double worst_lad = -INFINITY;
  for (const char* l : {"lad", "za_lad", "rza_lad"}) worst_lad = std::max(worst_lad, tail_db(r, l, 0));
  bool ok = true;
  std::string detail;
  for (const char* l : {"lms", "za_lms", "rza_lms"}) {
    const auto& s = series_of(r, l);
    const double margin = tail_db(r, l, 0) - worst_lad;
    const double frac = static_cast<double>(s.diverged) / static_cast<double>(s.trials);
    ok = ok && (margin >= 10.0 || frac > 0.1);
    detail += fmt(" %s +%.2f dB, diverged %.1f%%;", l, margin, 100 * frac);
  }
  verdict(5, ok, "LMS family vs worst LAD family in phase 1:" + detail + " (need >= 10 dB or > 10%)");
}

void example2_large_epsilon() {
  auto cfg = make_example(ExampleId::EX2);
  cfg.trials = kTrials;
  cfg.algorithms.resize(3);
  cfg.algorithms[2].params.epsilon = 10.0;
  const auto r = run_experiment(cfg, kSeed, 0);
  info(4, fmt("with rza_lad eps=10: phase 1 dB lad %.2f za_lad %.2f rza_lad %.2f; phase 3 dB %.2f %.2f %.2f",
              tail_db(r, "lad", 0), tail_db(r, "za_lad", 0), tail_db(r, "rza_lad", 0),
              tail_db(r, "lad", 2), tail_db(r, "za_lad", 2), tail_db(r, "rza_lad", 2)));
}

std::size_t iterations_to_band(const MsdSeries& s, double steady_db) {
  for (std::size_t n = 0; n < s.values.size(); ++n) {
    if (to_db(s.values[n]) <= steady_db + 3.0) return n;
  }
  return s.values.size();
}

void example1() {
  auto cfg = make_example(ExampleId::EX1);
  cfg.trials = kTrials;
  const auto r = run_experiment(cfg, kSeed, 0);
  const std::size_t end = cfg.trajectory.total_iterations();
  auto steady = [&](std::string_view l) { return to_db(window_mean(series_of(r, l).values, end - kTail, end)); };
  const double lad = steady("lad");
  const double za = steady("za_lad");

  std::string detail;
  bool ok = true;
  for (double eps : {1e-2, 1e-1, 1.0}) {
    const double margin = lad - steady(epsilon_label(eps));
    ok = ok && margin >= 1.0;
    detail += fmt(" eps=%g beats lad by %.2f dB;", eps, margin);
  }
  const double gap = std::abs(steady(epsilon_label(1e-3)) - za);
  ok = ok && gap <= 1.0;
  const auto slow = iterations_to_band(series_of(r, epsilon_label(10.0)), steady(epsilon_label(10.0)));
  const auto fast = iterations_to_band(series_of(r, epsilon_label(1e-2)), steady(epsilon_label(1e-2)));
  ok = ok && slow > fast;
  verdict(6, ok,
          "example 1:" + detail +
              fmt(" |eps=0.001 - za_lad| = %.2f dB; iterations to 3 dB band eps=10: %zu, eps=0.01: %zu "
                  "(need >= 1 dB, <= 1 dB, eps=10 slower)",
                  gap, slow, fast));
  std::string all;
  for (const auto& s : r.series) all += fmt(" %s %.2f dB;", s.label.c_str(), steady(s.label));
  info(6, "steady state:" + all);
}

void zero_estimator() {
  const auto t = make_example(ExampleId::EX2).trajectory;
  std::vector<std::vector<std::vector<double>>> histories(
      2, std::vector<std::vector<double>>(t.total_iterations(), std::vector<double>(t.taps(), 0.0)));
  const auto s = msd_trajectory(histories, t);
  bool ok = true;
  const double expected[] = {1.0, 8.0, 16.0};
  for (std::size_t k = 0; k < 3; ++k) {
    const auto [b, e] = t.phase_range(k);
    for (std::size_t n = b; n < e; ++n) ok = ok && s.values[n] == expected[k];
  }
  verdict(7, ok, "all-zero estimator on example 2 gives MSD 1, 8, 16 exactly");
}

void determinism(const ExperimentResult& reference) {
  const auto again = run_experiment(reference.config, kSeed, 0);
  const auto one = run_experiment(reference.config, kSeed, 1);
  const auto eight = run_experiment(reference.config, kSeed, 8);
  const auto base = csv_of(reference);
  verdict(8, base == csv_of(again) && base == csv_of(one) && base == csv_of(eight),
          fmt("example 2 CSV (%zu bytes) byte-identical across reruns and parallelism 1 vs 8", base.size()));
}

}  // namespace

int main() {
  try {
    subgradients();
    za_rza_limit();
    sampler();

    auto ex2 = make_example(ExampleId::EX2);
    ex2.trials = kTrials;
    const auto r2 = run_experiment(ex2, kSeed, 0);
    example2(r2);
    example2_large_epsilon();
    example1();
    zero_estimator();
    determinism(r2);
  } catch (const std::exception& e) {
    std::printf("FAIL acceptance aborted: %s\n", e.what());
    return 2;
  }
  std::printf("%d criterion check(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
