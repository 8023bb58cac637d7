#ifndef WGLAB_NORMS_HPP
#define WGLAB_NORMS_HPP

#include <span>
#include <string>
#include <vector>

#include "wglab/field.hpp"

namespace wglab {

enum class NormKind { mass, h1, h01, hs1s2, l4 };

struct NormReport {
    NormKind kind;
    double value = 0.0;   // always >= 0, degree-1 homogeneous in the field
    double s1 = 0.0;
    double s2 = 0.0;
};

// mass is ||u||_L2^2 (a squared quantity, kept for the conserved set);
// every other kind reports the norm itself.  L2-type kinds are evaluated
// spectrally, l4 by cell-weighted quadrature in physical space.
NormReport norm(const WaveguideField& f, NormKind kind, double s1 = 0.0, double s2 = 0.0);

double l2_norm(const WaveguideField& f);
double h1_norm(const WaveguideField& f);
double l4_norm(const WaveguideField& f);
// ||grad u||_L2 over all four directions.
double grad_l2_norm(const WaveguideField& f);
double l2_distance(const WaveguideField& a, const WaveguideField& b);
double h1_distance(const WaveguideField& a, const WaveguideField& b);

// Smooth dyadic Littlewood-Paley shell at level n (a power of two) acting
// on the full 4-D frequency; shells telescope to the cumulative low-pass.
WaveguideField lp_project(const WaveguideField& f, int n);
// Cumulative P_{<=n}: sum of shells 1,2,...,n.
WaveguideField lp_project_low(const WaveguideField& f, int n);
// Smallest dyadic level whose shell sum covers the resolved band.
int lp_max_level(const GridSpec& spec);

// x-direction-only smooth low-pass at threshold theta (not dyadic).
WaveguideField lowpass_x(const WaveguideField& f, double theta);

// (sum_N N^2 ||P_N u||^4_{L4, grid x interval})^{1/4} with trapezoidal
// time quadrature over the uniformly sampled trajectory; the dyadic sum
// stops at the grid Nyquist shell, a lower bound of the continuum norm.
double z_norm_estimate(std::span<const WaveguideField> samples, double dt_sample);

// Streaming form of the same quadrature: feed samples in time order, read
// the estimate for any sub-window afterwards.
class ZNormAccumulator {
public:
    explicit ZNormAccumulator(const GridSpec& spec);
    void add_sample(double t, const WaveguideField& f);
    // Z estimate over samples with t in [t0, t1] (inclusive).
    double window(double t0, double t1) const;
    double full() const;

private:
    std::vector<int> levels_;
    std::vector<double> times_;
    std::vector<std::vector<double>> l4_pow4_;  // [sample][shell]
};

}  // namespace wglab

#endif
