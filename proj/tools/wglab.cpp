#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wglab/config.hpp"
#include "wglab/io.hpp"
#include "wglab/lattice.hpp"
#include "wglab/scenarios.hpp"
#include "wglab/version.hpp"

namespace {

wglab::LatticePoint parse_pair(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos) throw CLI::ValidationError("expected A,B integer pair: " + s);
    return {std::stoll(s.substr(0, comma)), std::stoll(s.substr(comma + 1))};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"wglab: spectral laboratory for the cubic waveguide Schrodinger flow"};
    app.set_version_flag("--version", wglab::kVersion);
    app.require_subcommand(1);

    // --- run ---
    std::string config_path;
    auto* cmd_run = app.add_subcommand("run", "execute a scenario config");
    cmd_run->add_option("config", config_path, "JSON config file")->required();

    // --- report ---
    std::string manifest_path;
    bool report_json = false;
    auto* cmd_report = app.add_subcommand("report", "summarize a run manifest");
    cmd_report->add_option("manifest", manifest_path, "manifest.json from a run")->required();
    cmd_report->add_flag("--json", report_json, "machine-readable output");

    // --- resonance ---
    auto* cmd_res = app.add_subcommand("resonance", "lattice resonance utilities");
    cmd_res->require_subcommand(1);

    std::string j_str = "0,0";
    std::int64_t trunc = 4;
    bool use_fast = false;
    auto* cmd_enum = cmd_res->add_subcommand("enum", "list resonant triples for one output index");
    cmd_enum->add_option("--j", j_str, "output index A,B")->required();
    cmd_enum->add_option("--trunc", trunc, "l-inf truncation radius")->required();
    cmd_enum->add_flag("--fast", use_fast, "use the orthogonal-pair enumerator");

    std::int64_t jmax = 4;
    std::int64_t ws_trunc = 8;
    auto* cmd_ws = cmd_res->add_subcommand("weight-sum", "weighted triple sums over |j|_inf <= jmax");
    cmd_ws->add_option("--jmax", jmax, "index ball radius")->required();
    cmd_ws->add_option("--trunc", ws_trunc, "l-inf truncation radius")->required();

    std::string center_str = "0,0";
    std::int64_t r2x4 = 4;
    double amin = 1.0;
    auto* cmd_circle = cmd_res->add_subcommand("circle", "inverse-square sum over a lattice circle");
    cmd_circle->add_option("--center2x", center_str, "doubled center A,B")->required();
    cmd_circle->add_option("--r2x4", r2x4, "4 x squared radius")->required();
    cmd_circle->add_option("--amin", amin, "minimum |p|")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cmd_run) {
            wglab::ExperimentConfig cfg = wglab::load_config(config_path);
            wglab::RunManifest manifest = wglab::run(cfg);
            wglab::report((std::filesystem::path(cfg.output_dir) / "manifest.json").string(),
                          false, std::cout);
            return manifest.pass() ? 0 : 1;
        }
        if (*cmd_report) {
            return wglab::report(manifest_path, report_json, std::cout);
        }
        if (*cmd_enum) {
            auto j = parse_pair(j_str);
            auto triples = use_fast ? wglab::enumerate_resonant_triples_fast(j, trunc)
                                    : wglab::enumerate_resonant_triples(j, trunc);
            std::cout << "j1a,j1b,j2a,j2b,j3a,j3b\n";
            for (const auto& t : triples)
                std::cout << t.j1.a << ',' << t.j1.b << ',' << t.j2.a << ',' << t.j2.b << ','
                          << t.j3.a << ',' << t.j3.b << '\n';
            return 0;
        }
        if (*cmd_ws) {
            std::cout << "ja,jb,trunc,weight_sum\n";
            for (std::int64_t a = -jmax; a <= jmax; ++a)
                for (std::int64_t b = -jmax; b <= jmax; ++b)
                    std::cout << a << ',' << b << ',' << ws_trunc << ','
                              << wglab::num(wglab::weight_sum({a, b}, ws_trunc)) << '\n';
            return 0;
        }
        if (*cmd_circle) {
            auto c = parse_pair(center_str);
            double s = wglab::circle_lattice_sum(c, r2x4, amin);
            std::cout << "center2x_a,center2x_b,r2x4,amin,sum\n";
            std::cout << c.a << ',' << c.b << ',' << r2x4 << ',' << wglab::num(amin) << ','
                      << wglab::num(s) << '\n';
            return 0;
        }
    } catch (const wglab::ConfigError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
