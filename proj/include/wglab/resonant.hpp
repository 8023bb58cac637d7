#ifndef WGLAB_RESONANT_HPP
#define WGLAB_RESONANT_HPP

#include <span>
#include <vector>

#include "wglab/field.hpp"
#include "wglab/lattice.hpp"

namespace wglab {

// Finite family {v_j} of complex 2-D fields indexed by j in Z^2 with
// |j|_inf <= trunc, discretized on the 2-D restriction of the waveguide
// grid.  Component L2/L4 quadrature carries the torus volume (2pi)^2 so
// that torus-mode slicing of a waveguide field and mode-by-mode synthesis
// are exact isometries.
class ResonantState {
public:
    ResonantState() = default;
    ResonantState(int trunc, double box_side, int nx, Repr repr = Repr::physical);

    int trunc() const { return trunc_; }
    double box_side() const { return box_side_; }
    int nx() const { return nx_; }
    int side() const { return 2 * trunc_ + 1; }
    Repr repr() const { return repr_; }
    std::size_t grid_points() const { return std::size_t(nx_) * nx_; }

    // Quadrature weight of one 2-D cell, torus volume included.
    double cell() const;
    double hx() const { return box_side_ / nx_; }
    double x_coord(int i) const { return -0.5 * box_side_ + i * hx(); }
    double x_freq(int i) const;

    std::vector<cplx>& component(LatticePoint j);
    const std::vector<cplx>& component(LatticePoint j) const;
    std::vector<std::vector<cplx>>& components() { return comps_; }
    const std::vector<std::vector<cplx>>& components() const { return comps_; }
    LatticePoint index_point(int flat) const;

    void to_spectral_inplace();
    void to_physical_inplace();
    bool finite() const;

private:
    int trunc_ = 0;
    double box_side_ = 16.0;
    int nx_ = 64;
    Repr repr_ = Repr::physical;
    std::vector<std::vector<cplx>> comps_;
};

ResonantState operator+(const ResonantState& a, const ResonantState& b);
ResonantState operator-(const ResonantState& a, const ResonantState& b);
ResonantState operator*(cplx s, const ResonantState& a);

enum class ResonantNormKind { h1L2, hsHk, E_ls };

// E_ls = sum_p (1+|p|^2) ||v_p||_L2^2 (no 1/2 by default; the conjectural
// variant with the 1/2 prefactor is exposed through `half`).
double resonant_norm(const ResonantState& v, ResonantNormKind kind, double s = 1.0, double k = 0.0,
                     bool half = false);

double component_l2(const ResonantState& v, LatticePoint j);
double component_l4(const ResonantState& v, LatticePoint j);
double state_distance_h1l2(const ResonantState& a, const ResonantState& b);

// (sum_j <j>^2 ||v_j||^2_{L4, grid x interval})^{1/2}, trapezoid in time.
double w_norm_estimate(std::span<const ResonantState> samples, double dt_sample);

// Torus-mode slices v_p(x) of a waveguide field (requires the standard
// 2pi torus and trunc <= (my-1)/2).
ResonantState resonant_from_waveguide(const WaveguideField& f, int trunc);

// Plain synthesis sum_p v_p(x) exp(i p.y) back onto a waveguide grid.
WaveguideField waveguide_from_resonant(const ResonantState& v, const GridSpec& spec);

}  // namespace wglab

#endif
