#ifndef WGLAB_FIELD_HPP
#define WGLAB_FIELD_HPP

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "wglab/grid.hpp"

namespace wglab {

using cplx = std::complex<double>;

enum class Repr { physical, spectral };

// Complex field on the 4-D grid, row-major (x1, x2, y1, y2), tagged with
// its current representation.  The spectral representation stores the
// coefficients c of  u(x,y) = sum_m c_m exp(i xi_m.x + i k_m.y)  in FFT
// bin order, so Fourier multipliers read true frequencies off GridSpec.
// Public operations return new values; steppers mutate owned copies via
// the _inplace entry points.
class WaveguideField {
public:
    WaveguideField() = default;
    WaveguideField(const GridSpec& spec, Repr repr)
        : spec_(spec), repr_(repr), data_(spec.points(), cplx(0.0, 0.0)) {
        spec_.validate();
    }

    const GridSpec& spec() const { return spec_; }
    Repr repr() const { return repr_; }
    std::vector<cplx>& data() { return data_; }
    const std::vector<cplx>& data() const { return data_; }
    std::size_t size() const { return data_.size(); }

    std::size_t index(int i1, int i2, int j1, int j2) const {
        return ((std::size_t(i1) * spec_.nx + i2) * spec_.my + j1) * spec_.my + j2;
    }
    cplx& at(int i1, int i2, int j1, int j2) { return data_[index(i1, i2, j1, j2)]; }
    const cplx& at(int i1, int i2, int j1, int j2) const { return data_[index(i1, i2, j1, j2)]; }

    void to_spectral_inplace();
    void to_physical_inplace();
    bool finite() const;

    // Multiplies each spectral coefficient by m(fx1, fx2, fy1, fy2); field
    // must be spectral.
    void apply_multiplier_inplace(const std::function<cplx(double, double, double, double)>& m);

private:
    GridSpec spec_;
    Repr repr_ = Repr::physical;
    std::vector<cplx> data_;
};

WaveguideField to_spectral(const WaveguideField& f);
WaveguideField to_physical(const WaveguideField& f);
// Returns a copy in the requested representation (no-op if already there).
WaveguideField as(const WaveguideField& f, Repr repr);

// Pointwise algebra; representations must match.
WaveguideField operator+(const WaveguideField& a, const WaveguideField& b);
WaveguideField operator-(const WaveguideField& a, const WaveguideField& b);
WaveguideField operator*(cplx s, const WaveguideField& a);

// Samples g(x1, x2, y1, y2) on the physical grid; torus coordinates are
// passed centered in [-torus_side/2, torus_side/2).
WaveguideField field_from_function(
    const GridSpec& spec, const std::function<cplx(double, double, double, double)>& g);

// Plane wave exp(i xi.x + i k.y) for integer mode indices.
WaveguideField plane_wave(const GridSpec& spec, int mx1, int mx2, int ky1, int ky2);

class Rng;
// Random spectral data with smooth decay, band-limited to |(xi,k)| <= band.
WaveguideField random_band_limited(const GridSpec& spec, Rng& rng, double band);

// Flat binary container: JSON header line + interleaved re/im doubles.
void save_field(const WaveguideField& f, const std::string& path);
WaveguideField load_field(const std::string& path);

}  // namespace wglab

#endif
