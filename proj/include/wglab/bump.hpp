#ifndef WGLAB_BUMP_HPP
#define WGLAB_BUMP_HPP

namespace wglab {

// Radial cutoff template: 1 on [0,1], 0 on [2,inf), quintic smoothstep in
// between so the profile has two continuous derivatives at both seams.
// Every smooth cutoff in the code (Littlewood-Paley shells, profile
// cutoffs, the Virial window) is built from this one template.
inline double bump(double r) {
    if (r < 0) r = -r;
    if (r <= 1.0) return 1.0;
    if (r >= 2.0) return 0.0;
    double t = r - 1.0;
    double s = t * t * t * (10.0 + t * (-15.0 + 6.0 * t));
    return 1.0 - s;
}

// Dyadic shell weight at level n: bump(r/n) - bump(2r/n) for n >= 2,
// and the full low cap bump(r) at n = 1. Telescopes exactly to
// bump(r/nmax) when summed over 1,2,4,...,nmax.
inline double lp_shell(double r, double n) {
    if (n <= 1.0) return bump(r);
    return bump(r / n) - bump(2.0 * r / n);
}

// Cumulative low-pass weight, equal to the telescoped shell sum.
inline double lp_low(double r, double n) { return bump(r / n); }

}  // namespace wglab

#endif
