#ifndef WGLAB_GRID_HPP
#define WGLAB_GRID_HPP

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace wglab {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// Discretization of the product box [-L/2, L/2)^2 x (torus)^2.  The two
// unbounded directions are approximated by a periodic box of side
// box_side with nx points each (power of two); the torus directions carry
// my exact integer-indexed modes each (my odd, period torus_side, 2*pi by
// default).  Rescaled solutions live on grids with torus_side != 2*pi.
struct GridSpec {
    double box_side = 16.0;
    int nx = 64;
    int my = 5;
    double dt = 1e-3;
    double torus_side = kTwoPi;

    void validate() const {
        if (!(box_side > 0)) throw std::invalid_argument("grid.box_side must be > 0");
        if (nx < 8 || (nx & (nx - 1)) != 0) throw std::invalid_argument("grid.nx must be a power of two >= 8");
        if (my < 1 || my % 2 == 0) throw std::invalid_argument("grid.my must be odd and >= 1");
        if (!(dt > 0)) throw std::invalid_argument("grid.dt must be > 0");
        if (!(torus_side > 0)) throw std::invalid_argument("grid.torus_side must be > 0");
    }

    std::size_t points() const { return std::size_t(nx) * nx * my * my; }
    double hx() const { return box_side / nx; }
    double hy() const { return torus_side / my; }
    // Quadrature weight of one grid cell.
    double cell() const { return hx() * hx() * hy() * hy(); }
    double volume() const { return box_side * box_side * torus_side * torus_side; }

    double x_coord(int i) const { return -0.5 * box_side + i * hx(); }
    double y_coord(int j) const { return j * hy(); }
    // Torus coordinate wrapped to [-torus_side/2, torus_side/2).
    double y_centered(int j) const {
        double y = y_coord(j);
        return y < 0.5 * torus_side ? y : y - torus_side;
    }

    // Signed mode index for FFT bin i (x direction): 0..nx/2-1, -nx/2..-1.
    int x_index(int i) const { return i < nx / 2 ? i : i - nx; }
    // Signed mode index for FFT bin j (torus): my odd, so -(my-1)/2..(my-1)/2.
    int y_index(int j) const { return j <= (my - 1) / 2 ? j : j - my; }
    double x_freq(int i) const { return kTwoPi / box_side * x_index(i); }
    double y_freq(int j) const { return kTwoPi / torus_side * y_index(j); }

    bool same_layout(const GridSpec& o) const {
        return nx == o.nx && my == o.my && box_side == o.box_side && torus_side == o.torus_side;
    }

    friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

}  // namespace wglab

#endif
