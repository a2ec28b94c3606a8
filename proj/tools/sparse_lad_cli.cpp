// sparse-lad: run a sparse system-identification Monte-Carlo experiment and
// write msd.csv, summary.txt and config.json into the output directory.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "sparse_lad/config.hpp"
#include "sparse_lad/harness.hpp"
#include "sparse_lad/report.hpp"

namespace fs = std::filesystem;
using namespace sparse_lad;

namespace {

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << text;
  out.flush();
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

// The --scenario flag is spliced into the file's JSON so that the file's other
// sections still override the newly selected base scenario.
RunConfig load(const std::optional<std::string>& path, const std::optional<std::string>& scenario) {
  nlohmann::json root = nlohmann::json::object();
  if (path) {
    std::ifstream in(*path, std::ios::binary);
    if (!in) throw ConfigError("cannot read config file '" + *path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    try {
      root = nlohmann::json::parse(text.str());
    } catch (const nlohmann::json::parse_error& e) {
      throw ConfigError(*path + ": malformed JSON: " + e.what());
    }
    if (!root.is_object()) throw ConfigError(*path + ": expected a JSON object");
  }
  if (scenario) root["scenario"] = *scenario;
  return parse_config(root.dump());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sparse LAD / LMS adaptive filter system-identification experiments"};

  std::optional<std::string> config_path;
  std::optional<std::string> scenario;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> trials;
  std::optional<unsigned> parallelism;
  std::optional<std::string> out_dir;

  app.add_option("--config", config_path, "JSON run configuration")->check(CLI::ExistingFile);
  app.add_option("--scenario", scenario, "Base scenario")
      ->check(CLI::IsMember({"example1", "example2", "example3"}));
  app.add_option("--seed", seed, "Master seed (u64)");
  app.add_option("--trials", trials, "Independent trials")->check(CLI::PositiveNumber);
  app.add_option("--parallelism", parallelism, "Worker threads, 0 = OpenMP default");
  app.add_option("--out", out_dir, "Output directory");

  CLI11_PARSE(app, argc, argv);

  try {
    RunConfig config = load(config_path, scenario);
    if (seed) config.run.master_seed = *seed;
    if (trials) config.scenario.trials = *trials;
    if (parallelism) config.run.parallelism = *parallelism;
    if (out_dir) config.run.output_dir = *out_dir;

    const fs::path out = config.run.output_dir;
    std::error_code ec;
    fs::create_directories(out, ec);
    if (ec) throw IoError("cannot create '" + out.string() + "': " + ec.message());

    write_text(out / "config.json", echo_config(config));

    std::cerr << "running " << config.scenario.name << ": " << config.scenario.trials
              << " trials x " << config.scenario.algorithms.size() << " algorithms x "
              << config.scenario.trajectory.total_iterations() << " iterations\n";
    const auto result = run_experiment(
        config.scenario, config.run.master_seed, config.run.parallelism,
        config.run.divergence, [](std::uint64_t done, std::uint64_t total) {
          std::cerr << "\r  trials " << done << "/" << total << std::flush;
        });
    std::cerr << "\n";

    emit_csv(result, out / "msd.csv");
    const auto summary = summarize(result);
    write_text(out / "summary.txt", summary);
    std::cout << summary;
    std::cerr << "wrote " << (out / "msd.csv").string() << "\n";
    return 0;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const IoError& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
