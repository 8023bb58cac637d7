#ifndef WGLAB_IO_HPP
#define WGLAB_IO_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "wglab/conserved.hpp"

namespace wglab {

// Shortest round-trippable decimal form of a double (%.17g), used for all
// CSV output so reruns are bit-identical.
std::string num(double x);

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows);

// Diagnostics CSV with the shared column set
// (step,time,mass,energy,momentum_x1,momentum_x2,full_energy,e_ls_if_resonant).
void write_diagnostics_csv(const std::string& path, const std::vector<DiagnosticsRecord>& records);

std::string read_text_file(const std::string& path);
// Writes text to path via a temp file + rename.
void write_text_atomic(const std::string& path, const std::string& text);

std::uint64_t fnv1a64(const std::string& text);

// WGLAB_DETERMINISTIC=1 pins every reduction to a fixed order (parallel
// batch helpers fall back to sequential execution).
bool deterministic_mode();

}  // namespace wglab

#endif
