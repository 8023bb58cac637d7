#include "wglab/field.hpp"

#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "wglab/bump.hpp"
#include "wglab/fft.hpp"
#include "wglab/rng.hpp"

namespace wglab {

namespace {

// The x coordinates start at -L/2 rather than 0; folding (-1)^(m1+m2)
// into the transform makes the stored coefficients the true coefficients
// of exp(i xi.x) on the centered box.  Torus coordinates start at 0, so
// the y directions need no correction.
void apply_x_offset_signs(WaveguideField& f) {
    const GridSpec& g = f.spec();
    auto& d = f.data();
    const std::size_t plane = std::size_t(g.my) * g.my;
    for (int i1 = 0; i1 < g.nx; ++i1)
        for (int i2 = 0; i2 < g.nx; ++i2) {
            if (((i1 + i2) & 1) == 0) continue;
            std::size_t base = (std::size_t(i1) * g.nx + i2) * plane;
            for (std::size_t k = 0; k < plane; ++k) d[base + k] = -d[base + k];
        }
}

std::vector<int> dims_of(const GridSpec& g) { return {g.nx, g.nx, g.my, g.my}; }

}  // namespace

void WaveguideField::to_spectral_inplace() {
    if (repr_ == Repr::spectral) throw std::invalid_argument("to_spectral: field already spectral");
    dft_forward(data_, dims_of(spec_));
    double inv = 1.0 / double(spec_.points());
    for (auto& v : data_) v *= inv;
    repr_ = Repr::spectral;
    apply_x_offset_signs(*this);
}

void WaveguideField::to_physical_inplace() {
    if (repr_ == Repr::physical) throw std::invalid_argument("to_physical: field already physical");
    apply_x_offset_signs(*this);
    dft_backward(data_, dims_of(spec_));
    repr_ = Repr::physical;
}

bool WaveguideField::finite() const {
    for (const auto& v : data_)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
}

void WaveguideField::apply_multiplier_inplace(
    const std::function<cplx(double, double, double, double)>& m) {
    if (repr_ != Repr::spectral) throw std::invalid_argument("apply_multiplier: field must be spectral");
    const GridSpec& g = spec_;
    std::vector<double> fx(g.nx), fy(g.my);
    for (int i = 0; i < g.nx; ++i) fx[i] = g.x_freq(i);
    for (int j = 0; j < g.my; ++j) fy[j] = g.y_freq(j);
    std::size_t p = 0;
    for (int i1 = 0; i1 < g.nx; ++i1)
        for (int i2 = 0; i2 < g.nx; ++i2)
            for (int j1 = 0; j1 < g.my; ++j1)
                for (int j2 = 0; j2 < g.my; ++j2) data_[p++] *= m(fx[i1], fx[i2], fy[j1], fy[j2]);
}

WaveguideField to_spectral(const WaveguideField& f) {
    WaveguideField out = f;
    out.to_spectral_inplace();
    return out;
}

WaveguideField to_physical(const WaveguideField& f) {
    WaveguideField out = f;
    out.to_physical_inplace();
    return out;
}

WaveguideField as(const WaveguideField& f, Repr repr) {
    if (f.repr() == repr) return f;
    return repr == Repr::spectral ? to_spectral(f) : to_physical(f);
}

namespace {
void check_compatible(const WaveguideField& a, const WaveguideField& b) {
    if (!a.spec().same_layout(b.spec())) throw std::invalid_argument("field op: grid mismatch");
    if (a.repr() != b.repr()) throw std::invalid_argument("field op: representation mismatch");
}
}  // namespace

WaveguideField operator+(const WaveguideField& a, const WaveguideField& b) {
    check_compatible(a, b);
    WaveguideField out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out.data()[i] += b.data()[i];
    return out;
}

WaveguideField operator-(const WaveguideField& a, const WaveguideField& b) {
    check_compatible(a, b);
    WaveguideField out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out.data()[i] -= b.data()[i];
    return out;
}

WaveguideField operator*(cplx s, const WaveguideField& a) {
    WaveguideField out = a;
    for (auto& v : out.data()) v *= s;
    return out;
}

WaveguideField field_from_function(
    const GridSpec& spec, const std::function<cplx(double, double, double, double)>& g) {
    WaveguideField f(spec, Repr::physical);
    for (int i1 = 0; i1 < spec.nx; ++i1)
        for (int i2 = 0; i2 < spec.nx; ++i2)
            for (int j1 = 0; j1 < spec.my; ++j1)
                for (int j2 = 0; j2 < spec.my; ++j2)
                    f.at(i1, i2, j1, j2) = g(spec.x_coord(i1), spec.x_coord(i2),
                                             spec.y_centered(j1), spec.y_centered(j2));
    return f;
}

WaveguideField plane_wave(const GridSpec& spec, int mx1, int mx2, int ky1, int ky2) {
    double f1 = kTwoPi / spec.box_side * mx1;
    double f2 = kTwoPi / spec.box_side * mx2;
    double g1 = kTwoPi / spec.torus_side * ky1;
    double g2 = kTwoPi / spec.torus_side * ky2;
    WaveguideField f(spec, Repr::physical);
    for (int i1 = 0; i1 < spec.nx; ++i1)
        for (int i2 = 0; i2 < spec.nx; ++i2) {
            double px = f1 * spec.x_coord(i1) + f2 * spec.x_coord(i2);
            for (int j1 = 0; j1 < spec.my; ++j1)
                for (int j2 = 0; j2 < spec.my; ++j2) {
                    double ph = px + g1 * spec.y_coord(j1) + g2 * spec.y_coord(j2);
                    f.at(i1, i2, j1, j2) = cplx(std::cos(ph), std::sin(ph));
                }
        }
    return f;
}

WaveguideField random_band_limited(const GridSpec& spec, Rng& rng, double band) {
    WaveguideField f(spec, Repr::spectral);
    for (int i1 = 0; i1 < spec.nx; ++i1)
        for (int i2 = 0; i2 < spec.nx; ++i2)
            for (int j1 = 0; j1 < spec.my; ++j1)
                for (int j2 = 0; j2 < spec.my; ++j2) {
                    double r2 = spec.x_freq(i1) * spec.x_freq(i1) + spec.x_freq(i2) * spec.x_freq(i2) +
                                spec.y_freq(j1) * spec.y_freq(j1) + spec.y_freq(j2) * spec.y_freq(j2);
                    cplx z = rng.cgaussian();  // fixed draw order, independent of band
                    double r = std::sqrt(r2);
                    if (r > band) continue;
                    f.at(i1, i2, j1, j2) = z * std::exp(-r2 / (band * band)) * bump(r / band);
                }
    return f;
}

void save_field(const WaveguideField& f, const std::string& path) {
    nlohmann::json header = {
        {"format", "wgfield"},
        {"version", 1},
        {"repr", f.repr() == Repr::physical ? "physical" : "spectral"},
        {"endianness", "little"},
        {"order", "x1,x2,y1,y2"},
        {"grid",
         {{"box_side", f.spec().box_side},
          {"nx", f.spec().nx},
          {"my", f.spec().my},
          {"dt", f.spec().dt},
          {"torus_side", f.spec().torus_side}}},
    };
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("save_field: cannot open " + path);
    out << header.dump() << '\n';
    for (const auto& v : f.data()) {
        double re = v.real(), im = v.imag();
        out.write(reinterpret_cast<const char*>(&re), sizeof re);
        out.write(reinterpret_cast<const char*>(&im), sizeof im);
    }
    if (!out) throw std::runtime_error("save_field: write failed for " + path);
}

WaveguideField load_field(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("load_field: cannot open " + path);
    std::string line;
    std::getline(in, line);
    nlohmann::json header = nlohmann::json::parse(line);
    if (header.at("format") != "wgfield" || header.at("version") != 1)
        throw std::runtime_error("load_field: unsupported container " + path);
    GridSpec spec;
    spec.box_side = header.at("grid").at("box_side").get<double>();
    spec.nx = header.at("grid").at("nx").get<int>();
    spec.my = header.at("grid").at("my").get<int>();
    spec.dt = header.at("grid").at("dt").get<double>();
    spec.torus_side = header.at("grid").at("torus_side").get<double>();
    Repr repr = header.at("repr") == "physical" ? Repr::physical : Repr::spectral;
    WaveguideField f(spec, repr);
    for (auto& v : f.data()) {
        double re, im;
        in.read(reinterpret_cast<char*>(&re), sizeof re);
        in.read(reinterpret_cast<char*>(&im), sizeof im);
        v = cplx(re, im);
    }
    if (!in) throw std::runtime_error("load_field: truncated container " + path);
    return f;
}

}  // namespace wglab
