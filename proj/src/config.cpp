#include "wglab/config.hpp"

#include <map>
#include <set>

#include "wglab/io.hpp"

namespace wglab {

namespace {

using nlohmann::json;

const std::map<std::string, Scenario> kScenarios = {
    {"conservation", Scenario::conservation},
    {"small_data_scattering", Scenario::small_data_scattering},
    {"ls_approx", Scenario::ls_approx},
    {"euclidean_approx", Scenario::euclidean_approx},
    {"resonance_combinatorics", Scenario::resonance_combinatorics},
    {"strichartz_probe", Scenario::strichartz_probe},
    {"morawetz_check", Scenario::morawetz_check},
    {"resonant_smalldata", Scenario::resonant_smalldata},
};

// Allowed keys of each scenario's params block.
const std::map<Scenario, std::set<std::string>> kParamKeys = {
    {Scenario::conservation,
     {"T", "h1_target", "mass_drift_tol", "momentum_drift_tol", "energy_ratio_range",
      "record_stride"}},
    {Scenario::small_data_scattering,
     {"h1_target", "gap_times", "sample_dt", "z_windows"}},
    {Scenario::ls_approx,
     {"m_values", "t0", "dt", "trunc", "samples_per_leg", "residual_ratio_range", "max_steps"}},
    {Scenario::euclidean_approx,
     {"n_values", "cutoff_radius", "t0", "dt", "samples_per_leg", "h1_bound_factor", "max_steps"}},
    {Scenario::resonance_combinatorics, {"jmax", "trunc"}},
    {Scenario::strichartz_probe,
     {"p", "q", "levels", "data_count", "windows", "samples_per_window", "band_headroom",
      "calibration_levels"}},
    {Scenario::morawetz_check, {"T", "dt_pair", "h1_target", "virial_R", "ratio_min"}},
    {Scenario::resonant_smalldata, {"els_target", "gap_times", "trunc", "dt", "sample_dt"}},
};

void reject_unknown(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (!allowed.count(it.key()))
            throw ConfigError("config error at " + where + "/" + it.key() + ": unknown key");
}

double require_number(const json& obj, const std::string& key, const std::string& where) {
    if (!obj.contains(key)) throw ConfigError("config error at " + where + ": missing key '" + key + "'");
    if (!obj.at(key).is_number())
        throw ConfigError("config error at " + where + "/" + key + ": expected a number");
    return obj.at(key).get<double>();
}

}  // namespace

std::string scenario_name(Scenario s) {
    for (const auto& [name, val] : kScenarios)
        if (val == s) return name;
    return "?";
}

ExperimentConfig parse_config(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config parse error: ") + e.what());
    }
    if (!root.is_object()) throw ConfigError("config error at /: expected an object");
    reject_unknown(root, {"scenario", "grid", "seed", "output_dir", "params"}, "");

    ExperimentConfig cfg;
    if (!root.contains("scenario") || !root.at("scenario").is_string())
        throw ConfigError("config error at /scenario: required string");
    auto it = kScenarios.find(root.at("scenario").get<std::string>());
    if (it == kScenarios.end())
        throw ConfigError("config error at /scenario: unknown scenario '" +
                          root.at("scenario").get<std::string>() + "'");
    cfg.scenario = it->second;

    if (!root.contains("grid") || !root.at("grid").is_object())
        throw ConfigError("config error at /grid: required object");
    const json& grid = root.at("grid");
    reject_unknown(grid, {"box_side", "nx", "my", "dt", "torus_side"}, "/grid");
    cfg.grid.box_side = require_number(grid, "box_side", "/grid");
    cfg.grid.nx = int(require_number(grid, "nx", "/grid"));
    cfg.grid.my = int(require_number(grid, "my", "/grid"));
    cfg.grid.dt = require_number(grid, "dt", "/grid");
    if (grid.contains("torus_side")) cfg.grid.torus_side = grid.at("torus_side").get<double>();
    try {
        cfg.grid.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("config error at /grid: ") + e.what());
    }

    if (root.contains("seed")) {
        if (!root.at("seed").is_number_integer())
            throw ConfigError("config error at /seed: expected an integer");
        cfg.seed = root.at("seed").get<std::uint64_t>();
    }
    if (root.contains("output_dir")) {
        if (!root.at("output_dir").is_string())
            throw ConfigError("config error at /output_dir: expected a string");
        cfg.output_dir = root.at("output_dir").get<std::string>();
    }

    cfg.params = root.contains("params") ? root.at("params") : json::object();
    if (!cfg.params.is_object()) throw ConfigError("config error at /params: expected an object");
    reject_unknown(cfg.params, kParamKeys.at(cfg.scenario), "/params");

    json canon = {{"scenario", scenario_name(cfg.scenario)},
                  {"grid",
                   {{"box_side", cfg.grid.box_side},
                    {"nx", cfg.grid.nx},
                    {"my", cfg.grid.my},
                    {"dt", cfg.grid.dt},
                    {"torus_side", cfg.grid.torus_side}}},
                  {"seed", cfg.seed},
                  {"output_dir", cfg.output_dir},
                  {"params", cfg.params}};
    cfg.canonical = canon.dump();
    return cfg;
}

ExperimentConfig load_config(const std::string& path) {
    std::string text;
    try {
        text = read_text_file(path);
    } catch (const std::runtime_error& e) {
        throw ConfigError(std::string("config error: ") + e.what());
    }
    return parse_config(text);
}

}  // namespace wglab
