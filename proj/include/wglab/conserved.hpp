#ifndef WGLAB_CONSERVED_HPP
#define WGLAB_CONSERVED_HPP

#include <optional>

#include "wglab/field.hpp"

namespace wglab {

// Conserved functionals of the cubic flow:
//   mass        ||u||_L2^2
//   energy      1/2 ||grad u||_L2^2 + 1/4 ||u||_L4^4
//   momentum    Im int conj(u) grad u  (the two unbounded directions)
//   full energy 1/2 mass + energy
struct ConservedSet {
    double mass = 0.0;
    double energy = 0.0;
    double momentum_x1 = 0.0;
    double momentum_x2 = 0.0;
    double full_energy = 0.0;
};

ConservedSet conserved_set(const WaveguideField& f);

// One monitored row of a time series; e_ls is filled for resonant runs.
struct DiagnosticsRecord {
    long step = 0;
    double time = 0.0;
    double mass = 0.0;
    double energy = 0.0;
    double momentum_x1 = 0.0;
    double momentum_x2 = 0.0;
    double full_energy = 0.0;
    std::optional<double> e_ls;
};

}  // namespace wglab

#endif
