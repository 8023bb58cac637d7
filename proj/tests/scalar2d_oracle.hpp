#ifndef WGLAB_TESTS_SCALAR2D_ORACLE_HPP
#define WGLAB_TESTS_SCALAR2D_ORACLE_HPP

// Test-only reference stepper: interaction-picture RK4 for the scalar
// cubic equation (i d_t + Lap_x) u = |u|^2 u on the 2-D box, written
// straight-line and independent of the resonant-system code path it
// checks.

#include <complex>
#include <vector>

#include "wglab/fft.hpp"
#include "wglab/grid.hpp"

namespace wglab_test {

using cplx = std::complex<double>;

struct Scalar2d {
    double box_side;
    int nx;
    std::vector<cplx> data;  // physical, row-major

    Scalar2d(double L, int n) : box_side(L), nx(n), data(std::size_t(n) * n) {}

    double freq(int i) const {
        int s = i < nx / 2 ? i : i - nx;
        return wglab::kTwoPi / box_side * s;
    }
};

inline void scalar_linear(Scalar2d& f, double t) {
    std::vector<int> dims{f.nx, f.nx};
    wglab::dft_forward(f.data, dims);
    std::size_t p = 0;
    for (int i1 = 0; i1 < f.nx; ++i1)
        for (int i2 = 0; i2 < f.nx; ++i2) {
            double x1 = f.freq(i1), x2 = f.freq(i2);
            f.data[p++] *= std::polar(1.0, -t * (x1 * x1 + x2 * x2));
        }
    wglab::dft_backward(f.data, dims);
    double inv = 1.0 / double(f.data.size());
    for (auto& v : f.data) v *= inv;
}

inline std::vector<cplx> scalar_nonlin(const Scalar2d& f) {
    std::vector<cplx> out(f.data.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = cplx(0, -1) * (f.data[i] * std::conj(f.data[i]) * f.data[i]);
    return out;
}

inline void scalar_step(Scalar2d& f, double h) {
    Scalar2d u_i = f;
    scalar_linear(u_i, 0.5 * h);
    Scalar2d k1 = f;
    k1.data = scalar_nonlin(f);
    scalar_linear(k1, 0.5 * h);

    Scalar2d stage = u_i;
    for (std::size_t i = 0; i < stage.data.size(); ++i) stage.data[i] += 0.5 * h * k1.data[i];
    std::vector<cplx> k2 = scalar_nonlin(stage);

    stage = u_i;
    for (std::size_t i = 0; i < stage.data.size(); ++i) stage.data[i] += 0.5 * h * k2[i];
    std::vector<cplx> k3 = scalar_nonlin(stage);

    stage = u_i;
    for (std::size_t i = 0; i < stage.data.size(); ++i) stage.data[i] += h * k3[i];
    scalar_linear(stage, 0.5 * h);
    std::vector<cplx> k4 = scalar_nonlin(stage);

    Scalar2d out = u_i;
    for (std::size_t i = 0; i < out.data.size(); ++i)
        out.data[i] += (h / 6.0) * k1.data[i] + (h / 3.0) * k2[i] + (h / 3.0) * k3[i];
    scalar_linear(out, 0.5 * h);
    for (std::size_t i = 0; i < out.data.size(); ++i) out.data[i] += (h / 6.0) * k4[i];
    f = out;
}

}  // namespace wglab_test

#endif
