#ifndef WGLAB_CONFIG_HPP
#define WGLAB_CONFIG_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "wglab/grid.hpp"

namespace wglab {

enum class Scenario {
    conservation,
    small_data_scattering,
    ls_approx,
    euclidean_approx,
    resonance_combinatorics,
    strichartz_probe,
    morawetz_check,
    resonant_smalldata,
};

std::string scenario_name(Scenario s);

// Raised on parse, schema, or range violations; the message carries a
// JSON-pointer-style path to the offending key.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ExperimentConfig {
    Scenario scenario = Scenario::conservation;
    GridSpec grid;
    std::uint64_t seed = 0;
    std::string output_dir = "out";
    nlohmann::json params;     // validated scenario-specific block
    std::string canonical;     // canonical serialized form, hashed into manifests
};

// Parses and validates a config file; unknown keys anywhere are rejected.
ExperimentConfig load_config(const std::string& path);
ExperimentConfig parse_config(const std::string& json_text);

}  // namespace wglab

#endif
