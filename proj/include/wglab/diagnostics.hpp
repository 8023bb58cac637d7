#ifndef WGLAB_DIAGNOSTICS_HPP
#define WGLAB_DIAGNOSTICS_HPP

#include <functional>

#include "wglab/conserved.hpp"
#include "wglab/evolution.hpp"
#include "wglab/field.hpp"
#include "wglab/resonant.hpp"

namespace wglab {

// Virial action A_R(t) = int chi((x1 - c(t))/R) (x1 - c(t)) Im[conj(u) d_x1 u],
// with the displacement wrapped into the periodic box.  chi is the shared
// bump template, so |s chi(s/R)| <= 2R and |A_R| <= 2 sqrt(2) R sqrt(M E).
struct VirialConfig {
    double R = 2.0;
    std::function<double(double)> center_path = [](double) { return 0.0; };
};

double virial_action(const WaveguideField& f, const VirialConfig& cfg, double t);

// Pinned constant c in |A_R| <= c R sqrt(mass * energy) for the bump chi.
inline double virial_bound_constant() { return 2.8284271247461903; }

// L2 norm of (central time difference of Im[conj(u) d_x1 u]) minus the
// spectrally evaluated right side
//   d_x1 Lap(|u|^2/2) - 2 div Re[d_x1 conj(u) grad u] - 1/4 d_x1 |u|^4
// over three consecutive trajectory samples spaced dt apart.
double momentum_identity_residual(const WaveguideField& prev, const WaveguideField& mid,
                                  const WaveguideField& next, double dt);

struct StrichartzProbeConfig {
    double p = 4.0;
    double q = 4.0;  // must satisfy 1/p + 1/q = 1/2, p > 10/3
    int n_level = 1;
    int windows = 8;             // time windows of length 2 pi
    int samples_per_window = 9;  // trapezoid nodes per window
};

// || e^{it Lap} P_{<=N} u0 ||_{l^q_g L^p} / (N^{2-6/p} ||u0||_{L2}) over
// the configured window count.
double strichartz_quotient(const WaveguideField& u0, const StrichartzProbeConfig& cfg);

struct ScatteringExtract {
    WaveguideField candidate;  // e^{-t2 Lap} pullback of the later sample
    double cauchy_gap = 0.0;   // H1 distance of the two pullbacks
};

ScatteringExtract scattering_extract(const WaveguideField& u_t1, double t1,
                                     const WaveguideField& u_t2, double t2);

struct ResonantScatteringExtract {
    ResonantState candidate;
    double cauchy_gap = 0.0;  // h1L2 distance of the componentwise pullbacks
};

ResonantScatteringExtract resonant_scattering_extract(const ResonantState& v_t1, double t1,
                                                      const ResonantState& v_t2, double t2);

}  // namespace wglab

#endif
