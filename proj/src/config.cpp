#include "sparse_lad/config.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>

#include <json.hpp>

namespace sparse_lad {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw ConfigError(field + ": " + what);
}

void require_object(const json& j, const std::string& field) {
  if (!j.is_object()) fail(field, "expected a JSON object");
}

void reject_unknown(const json& j, const std::string& field,
                    std::initializer_list<std::string_view> known) {
  for (const auto& [key, value] : j.items()) {
    bool found = false;
    for (auto k : known) found = found || key == k;
    if (!found) fail(field.empty() ? key : field + "." + key, "unknown key");
  }
}

std::string join(const std::string& parent, const std::string& key) {
  return parent.empty() ? key : parent + "." + key;
}

double number(const json& j, const std::string& field) {
  if (!j.is_number()) fail(field, "expected a number");
  return j.get<double>();
}

std::uint64_t natural(const json& j, const std::string& field) {
  if (!j.is_number_integer() || (j.is_number_integer() && !j.is_number_unsigned() &&
                                 j.get<std::int64_t>() < 0)) {
    fail(field, "expected a non-negative integer");
  }
  return j.get<std::uint64_t>();
}

std::string text(const json& j, const std::string& field) {
  if (!j.is_string()) fail(field, "expected a string");
  return j.get<std::string>();
}

// Runs a module validator and re-throws its message under a field path.
template <class F>
void checked(const std::string& field, F&& validate) {
  try {
    validate();
  } catch (const std::invalid_argument& e) {
    fail(field, e.what());
  }
}

SystemTrajectory read_trajectory(const json& j) {
  const std::string field = "trajectory";
  require_object(j, field);
  reject_unknown(j, field, {"total_iterations", "phases"});
  if (!j.contains("total_iterations")) fail(join(field, "total_iterations"), "missing");
  if (!j.contains("phases")) fail(join(field, "phases"), "missing");
  const auto total = natural(j["total_iterations"], join(field, "total_iterations"));
  const auto& phases_json = j["phases"];
  if (!phases_json.is_array()) fail(join(field, "phases"), "expected an array");
  std::vector<Phase> phases;
  for (std::size_t k = 0; k < phases_json.size(); ++k) {
    const std::string pf = field + ".phases[" + std::to_string(k) + "]";
    const auto& p = phases_json[k];
    require_object(p, pf);
    reject_unknown(p, pf, {"start", "coefficients"});
    if (!p.contains("start") || !p.contains("coefficients")) {
      fail(pf, "needs 'start' and 'coefficients'");
    }
    Phase phase;
    phase.start_iteration = natural(p["start"], join(pf, "start"));
    if (!p["coefficients"].is_array()) fail(join(pf, "coefficients"), "expected an array");
    for (std::size_t m = 0; m < p["coefficients"].size(); ++m) {
      phase.coefficients.push_back(
          number(p["coefficients"][m], pf + ".coefficients[" + std::to_string(m) + "]"));
    }
    phases.push_back(std::move(phase));
  }
  try {
    return SystemTrajectory(std::move(phases), total);
  } catch (const std::invalid_argument& e) {
    fail(field, e.what());
  }
}

void read_input(const json& j, InputSpec& input) {
  const std::string field = "input";
  require_object(j, field);
  reject_unknown(j, field, {"kind", "variance", "ar_coefficient"});
  if (j.contains("kind")) {
    const auto kind = text(j["kind"], join(field, "kind"));
    if (kind == "white_gaussian") {
      input.kind = InputKind::WhiteGaussian;
    } else if (kind == "ar1") {
      input.kind = InputKind::AR1;
    } else {
      fail(join(field, "kind"), "expected 'white_gaussian' or 'ar1', got '" + kind + "'");
    }
  }
  if (j.contains("variance")) input.variance = number(j["variance"], join(field, "variance"));
  if (j.contains("ar_coefficient")) {
    input.ar_coefficient = number(j["ar_coefficient"], join(field, "ar_coefficient"));
  }
  checked(field, [&] { input.validate(); });
}

void read_noise(const json& j, NoiseModel& noise) {
  const std::string field = "noise";
  require_object(j, field);
  reject_unknown(j, field, {"kind", "alpha", "beta", "location", "scale", "variance", "gsnr_db"});
  if (j.contains("kind")) {
    const auto kind = text(j["kind"], join(field, "kind"));
    if (kind == "alpha_stable") {
      noise.kind = NoiseKind::AlphaStable;
    } else if (kind == "gaussian") {
      noise.kind = NoiseKind::Gaussian;
    } else {
      fail(join(field, "kind"), "expected 'alpha_stable' or 'gaussian', got '" + kind + "'");
    }
  }
  if (j.contains("alpha")) noise.stable.alpha = number(j["alpha"], join(field, "alpha"));
  if (j.contains("beta")) noise.stable.beta = number(j["beta"], join(field, "beta"));
  if (j.contains("location")) {
    noise.stable.location = number(j["location"], join(field, "location"));
  }
  if (j.contains("scale")) noise.stable.scale = number(j["scale"], join(field, "scale"));
  if (j.contains("variance")) {
    noise.gaussian_variance = number(j["variance"], join(field, "variance"));
  }

  const bool explicit_spread = noise.kind == NoiseKind::AlphaStable ? j.contains("scale")
                                                                    : j.contains("variance");
  if (j.contains("gsnr_db")) {
    if (j["gsnr_db"].is_null()) {
      noise.gsnr_db.reset();
    } else {
      noise.gsnr_db = number(j["gsnr_db"], join(field, "gsnr_db"));
      if (explicit_spread) {
        fail(join(field, "gsnr_db"), "conflicts with an explicit noise scale/variance");
      }
    }
  } else if (explicit_spread) {
    noise.gsnr_db.reset();
  }
  checked(field, [&] { noise.validate(); });
}

std::vector<AlgorithmEntry> read_algorithms(const json& j) {
  const std::string field = "algorithms";
  if (!j.is_array()) fail(field, "expected an array");
  std::vector<AlgorithmEntry> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string af = field + "[" + std::to_string(i) + "]";
    const auto& a = j[i];
    require_object(a, af);
    reject_unknown(a, af, {"algorithm", "label", "mu", "rho", "epsilon"});
    if (!a.contains("algorithm")) fail(join(af, "algorithm"), "missing");
    const auto name = text(a["algorithm"], join(af, "algorithm"));
    const auto algorithm = parse_algorithm(name);
    if (!algorithm) fail(join(af, "algorithm"), "unknown algorithm '" + name + "'");

    AlgorithmEntry entry{std::string(to_string(*algorithm)), default_params(*algorithm)};
    if (a.contains("label")) entry.label = text(a["label"], join(af, "label"));
    if (a.contains("mu")) entry.params.mu = number(a["mu"], join(af, "mu"));
    if (a.contains("rho")) entry.params.rho = number(a["rho"], join(af, "rho"));
    if (a.contains("epsilon")) entry.params.epsilon = number(a["epsilon"], join(af, "epsilon"));
    checked(af, [&] { entry.params.validate(); });
    out.push_back(std::move(entry));
  }
  return out;
}

DivergencePolicy read_divergence(const json& j) {
  const std::string field = "divergence";
  require_object(j, field);
  reject_unknown(j, field, {"mode", "cap_value"});
  DivergencePolicy policy;
  if (j.contains("mode")) {
    const auto mode = text(j["mode"], join(field, "mode"));
    if (mode == "exclude") {
      policy.mode = DivergencePolicy::Mode::Exclude;
    } else if (mode == "cap") {
      policy.mode = DivergencePolicy::Mode::Cap;
    } else {
      fail(join(field, "mode"), "expected 'exclude' or 'cap', got '" + mode + "'");
    }
  }
  if (j.contains("cap_value")) {
    policy.cap_value = number(j["cap_value"], join(field, "cap_value"));
    if (!std::isfinite(policy.cap_value) || policy.cap_value < 0.0) {
      fail(join(field, "cap_value"), "must be a finite non-negative number");
    }
  }
  return policy;
}

}  // namespace

RunConfig parse_config(std::string_view json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("malformed JSON: ") + e.what());
  }
  require_object(root, "config");
  reject_unknown(root, "", {"scenario", "trials", "master_seed", "parallelism", "output_dir",
                            "trajectory", "input", "noise", "algorithms", "divergence"});

  ExampleId base = ExampleId::EX2;
  if (root.contains("scenario")) {
    checked("scenario", [&] { base = parse_example(text(root["scenario"], "scenario")); });
  }
  RunConfig config{make_example(base), {}};
  auto& sc = config.scenario;

  if (root.contains("trajectory")) sc.trajectory = read_trajectory(root["trajectory"]);
  if (root.contains("input")) read_input(root["input"], sc.input);
  if (root.contains("noise")) read_noise(root["noise"], sc.noise);
  if (root.contains("algorithms")) sc.algorithms = read_algorithms(root["algorithms"]);
  if (root.contains("trials")) {
    sc.trials = natural(root["trials"], "trials");
    if (sc.trials < 1) fail("trials", "must be at least 1");
  }
  if (root.contains("master_seed")) {
    config.run.master_seed = natural(root["master_seed"], "master_seed");
  }
  if (root.contains("parallelism")) {
    const auto p = natural(root["parallelism"], "parallelism");
    if (p > 4096) fail("parallelism", "must not exceed 4096");
    config.run.parallelism = static_cast<unsigned>(p);
  }
  if (root.contains("output_dir")) config.run.output_dir = text(root["output_dir"], "output_dir");
  if (root.contains("divergence")) config.run.divergence = read_divergence(root["divergence"]);

  checked("config", [&] { sc.validate(); });
  return config;
}

RunConfig parse_config_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read config file '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

std::string echo_config(const RunConfig& config) {
  const auto& sc = config.scenario;
  json root;
  root["scenario"] = sc.name;
  root["trials"] = sc.trials;
  root["master_seed"] = config.run.master_seed;
  root["parallelism"] = config.run.parallelism;
  root["output_dir"] = config.run.output_dir;

  json phases = json::array();
  for (const auto& p : sc.trajectory.phases()) {
    phases.push_back({{"start", p.start_iteration}, {"coefficients", p.coefficients}});
  }
  root["trajectory"] = {{"total_iterations", sc.trajectory.total_iterations()},
                        {"phases", phases}};

  root["input"] = {
      {"kind", sc.input.kind == InputKind::AR1 ? "ar1" : "white_gaussian"},
      {"variance", sc.input.variance},
      {"ar_coefficient", sc.input.ar_coefficient},
  };

  json noise = {
      {"kind", sc.noise.kind == NoiseKind::AlphaStable ? "alpha_stable" : "gaussian"},
      {"alpha", sc.noise.stable.alpha},
      {"beta", sc.noise.stable.beta},
      {"location", sc.noise.stable.location},
  };
  if (sc.noise.gsnr_db) {
    noise["gsnr_db"] = *sc.noise.gsnr_db;
  } else if (sc.noise.kind == NoiseKind::AlphaStable) {
    noise["scale"] = sc.noise.stable.scale;
  } else {
    noise["variance"] = sc.noise.gaussian_variance;
  }
  root["noise"] = noise;

  json algorithms = json::array();
  for (const auto& a : sc.algorithms) {
    algorithms.push_back({{"algorithm", std::string(to_string(a.params.algorithm))},
                          {"label", a.label},
                          {"mu", a.params.mu},
                          {"rho", a.params.rho},
                          {"epsilon", a.params.epsilon}});
  }
  root["algorithms"] = algorithms;

  root["divergence"] = {
      {"mode", config.run.divergence.mode == DivergencePolicy::Mode::Cap ? "cap" : "exclude"},
      {"cap_value", config.run.divergence.cap_value},
  };
  return root.dump(2) + "\n";
}

}  // namespace sparse_lad
