#ifndef WGLAB_SCENARIOS_HPP
#define WGLAB_SCENARIOS_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "wglab/config.hpp"

namespace wglab {

struct Assertion {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct RunManifest {
    std::string config_hash;
    std::string tool_version;
    std::string started_at;
    std::string finished_at;
    std::vector<std::string> files;  // every artifact the run produced
    std::vector<Assertion> assertions;

    bool pass() const;
    nlohmann::json to_json() const;
    static RunManifest from_json(const nlohmann::json& j);
};

// Executes the configured scenario, writes its CSV/JSON artifacts and the
// manifest (atomically, last) into output_dir, and returns the manifest.
RunManifest run(const ExperimentConfig& cfg);

// Renders a manifest summary; returns 0 when every assertion passed,
// 1 otherwise.  Throws on a missing or malformed manifest.
int report(const std::string& manifest_path, bool as_json, std::ostream& out);

}  // namespace wglab

#endif
