#include "wglab/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace wglab {

std::string num(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
    std::ostringstream out;
    for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
    out << '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
        out << '\n';
    }
    write_text_atomic(path, out.str());
}

void write_diagnostics_csv(const std::string& path, const std::vector<DiagnosticsRecord>& records) {
    std::vector<std::vector<std::string>> rows;
    rows.reserve(records.size());
    for (const auto& r : records) {
        rows.push_back({std::to_string(r.step), num(r.time), num(r.mass), num(r.energy),
                        num(r.momentum_x1), num(r.momentum_x2), num(r.full_energy),
                        r.e_ls ? num(*r.e_ls) : ""});
    }
    write_csv(path,
              {"step", "time", "mass", "energy", "momentum_x1", "momentum_x2", "full_energy",
               "e_ls_if_resonant"},
              rows);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_atomic(const std::string& path, const std::string& text) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp);
        out << text;
        if (!out) throw std::runtime_error("write failed for " + tmp);
    }
    std::filesystem::rename(tmp, path);
}

std::uint64_t fnv1a64(const std::string& text) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

bool deterministic_mode() {
    static bool value = [] {
        const char* env = std::getenv("WGLAB_DETERMINISTIC");
        return env && env[0] == '1';
    }();
    return value;
}

}  // namespace wglab
