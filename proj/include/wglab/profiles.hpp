#ifndef WGLAB_PROFILES_HPP
#define WGLAB_PROFILES_HPP

#include <functional>
#include <vector>

#include "wglab/field.hpp"
#include "wglab/resonant.hpp"

namespace wglab {

// Single element of a symmetry frame: modulation by xi (R^2 only), time
// translation under the linear flow, then spatial translation.  scale
// marks which profile family the element belongs to (N >= 1 Euclidean,
// M <= 1 large-scale, exactly 1 scale-one); the isometry part applied by
// frame_apply does not depend on it.
struct FrameElement {
    double scale = 1.0;
    double t0 = 0.0;
    double x0_1 = 0.0, x0_2 = 0.0;  // box translation (multiples of hx)
    double y0_1 = 0.0, y0_2 = 0.0;  // torus translation (multiples of hy)
    double xi_1 = 0.0, xi_2 = 0.0;  // dual-lattice modulation frequency
};

// (e^{-i t0 Lap} [e^{i x.xi} f])(x - x0); throws on off-lattice x0 or xi.
WaveguideField frame_apply(const WaveguideField& f, const FrameElement& frame);
WaveguideField frame_apply_inverse(const WaveguideField& f, const FrameElement& frame);
// Composition law for modulation-free frames: apply(b) then apply(a).
FrameElement frame_compose(const FrameElement& a, const FrameElement& b);

// Companion grid for scale-N profiles: every side stretched by N with the
// same point counts, so x -> N x is the identity index map.
GridSpec companion_grid(const GridSpec& base, double n);

struct EuclideanProfileSpec {
    WaveguideField phi;  // profile on the companion (R^4 box) grid
    double n = 1.0;      // concentration scale N >= 1
};

// f_N on the waveguide grid: N eta(N^{1/2} z) phi(N z), the compactly
// supported H^1-invariant rescaling transplanted through the identity
// chart.  Throws if the cutoff support would wrap around the torus or if
// phi does not live on the matching companion grid.
WaveguideField euclidean_profile(const EuclideanProfileSpec& spec, const GridSpec& target);

constexpr double kLargeScaleLowpassExponent = 0.01;  // threshold M^{-1/100}

struct LargeScaleProfileSpec {
    WaveguideField psi;  // H^{0,1} generator on the base grid
    double m = 1.0;      // anisotropic scale M <= 1, a power of two
};

// T^ls_M psi = M P^x_{<= M^{-1/100}} psi (M x, y) on the stretched box
// grid {L/M, nx, my}.
WaveguideField large_scale_profile(const LargeScaleProfileSpec& spec);

// V_M(x,y,t) = sum_q e^{-i t |q|^2} e^{i q.y} M v_q(M x), assembled from
// the resonant state sampled at system time M^2 t.
WaveguideField reconstruct_from_resonant(const ResonantState& v, double m, double t,
                                         const GridSpec& target);

// Non-resonant forcing sum_q e^{i q.y} sum_{NR(q)} e^{-i t(|q|^2 + Phi)}
// M^3 (v_p1 conj(v_p2) v_p3)(M x), restricted to output modes the target
// grid resolves.
WaveguideField nonresonant_forcing(const ResonantState& v, double m, double t,
                                   const GridSpec& target);

struct LsApproxParams {
    std::vector<double> m_values;  // decreasing powers of two <= 1
    double t0 = 0.5;               // horizon |t| <= t0 / M^2
    double dt = 5e-3;              // waveguide step at every M
    int trunc = 2;
    int samples_per_leg = 32;
    double rho = 1.0;              // 0 disables both nonlinearities
    long max_steps = 2000000;      // resource guard on t0 M^{-2} step counts
};

struct LsApproxRow {
    double m = 0.0;
    double time_horizon = 0.0;
    double sup_h1_error = 0.0;
    double rel_error = 0.0;
    double residual_proxy = 0.0;  // L2-in-time H1 norm of the NR forcing
    double wall_seconds = 0.0;
};

std::vector<LsApproxRow> ls_approximation_experiment(const WaveguideField& psi,
                                                     const LsApproxParams& params);

struct EuclidApproxParams {
    std::vector<double> n_values;  // increasing powers of two >= 1
    double cutoff_radius = 2.0;    // R of the output cutoff
    double t0 = 0.5;               // horizon |t| <= t0 / N^2
    double dt = 4e-3;              // companion step; waveguide uses dt/N^2
    int samples_per_leg = 16;
    double rho = 1.0;
    long max_steps = 2000000;
};

struct EuclidApproxRow {
    double n = 0.0;
    double time_horizon = 0.0;
    double sup_h1_error = 0.0;
    double rel_error = 0.0;
    double h1_max_ratio = 0.0;  // max_t ||U_N||_H1 / ||U_N(0)||_H1
    double wall_seconds = 0.0;
};

// Evolves U_N from f_N on the waveguide and the companion solution from
// phi on the scaled R^4 box with the same stepper, then compares U_N with
// the cutoff-rescaled transplant in sup-in-time H1.  phi is sampled
// analytically on each companion grid.
std::vector<EuclidApproxRow> euclidean_approximation_experiment(
    const std::function<cplx(double, double, double, double)>& phi, const GridSpec& base,
    const EuclidApproxParams& params);

}  // namespace wglab

#endif
