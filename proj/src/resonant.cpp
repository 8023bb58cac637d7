#include "wglab/resonant.hpp"

#include <cmath>
#include <stdexcept>

#include "wglab/fft.hpp"

namespace wglab {

ResonantState::ResonantState(int trunc, double box_side, int nx, Repr repr)
    : trunc_(trunc), box_side_(box_side), nx_(nx), repr_(repr) {
    if (trunc < 0) throw std::invalid_argument("ResonantState: trunc < 0");
    if (!(box_side > 0) || nx < 8) throw std::invalid_argument("ResonantState: bad 2-D grid");
    comps_.assign(std::size_t(side()) * side(), std::vector<cplx>(grid_points(), cplx(0, 0)));
}

double ResonantState::cell() const { return hx() * hx() * kTwoPi * kTwoPi; }

double ResonantState::x_freq(int i) const {
    int s = i < nx_ / 2 ? i : i - nx_;
    return kTwoPi / box_side_ * s;
}

std::vector<cplx>& ResonantState::component(LatticePoint j) {
    if (j.linf() > trunc_) throw std::out_of_range("ResonantState::component: |j|_inf > trunc");
    return comps_[std::size_t(j.a + trunc_) * side() + std::size_t(j.b + trunc_)];
}

const std::vector<cplx>& ResonantState::component(LatticePoint j) const {
    if (j.linf() > trunc_) throw std::out_of_range("ResonantState::component: |j|_inf > trunc");
    return comps_[std::size_t(j.a + trunc_) * side() + std::size_t(j.b + trunc_)];
}

LatticePoint ResonantState::index_point(int flat) const {
    return {flat / side() - trunc_, flat % side() - trunc_};
}

namespace {

void offset_signs_2d(std::vector<cplx>& d, int nx) {
    for (int i1 = 0; i1 < nx; ++i1)
        for (int i2 = 0; i2 < nx; ++i2)
            if ((i1 + i2) & 1) d[std::size_t(i1) * nx + i2] = -d[std::size_t(i1) * nx + i2];
}

}  // namespace

void ResonantState::to_spectral_inplace() {
    if (repr_ == Repr::spectral) throw std::invalid_argument("ResonantState: already spectral");
    std::vector<int> dims{nx_, nx_};
    double inv = 1.0 / double(grid_points());
    for (auto& c : comps_) {
        dft_forward(c, dims);
        for (auto& v : c) v *= inv;
        offset_signs_2d(c, nx_);
    }
    repr_ = Repr::spectral;
}

void ResonantState::to_physical_inplace() {
    if (repr_ == Repr::physical) throw std::invalid_argument("ResonantState: already physical");
    std::vector<int> dims{nx_, nx_};
    for (auto& c : comps_) {
        offset_signs_2d(c, nx_);
        dft_backward(c, dims);
    }
    repr_ = Repr::physical;
}

bool ResonantState::finite() const {
    for (const auto& c : comps_)
        for (const auto& v : c)
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
}

namespace {
void check_states(const ResonantState& a, const ResonantState& b) {
    if (a.trunc() != b.trunc() || a.nx() != b.nx() || a.box_side() != b.box_side() ||
        a.repr() != b.repr())
        throw std::invalid_argument("resonant op: state mismatch");
}
}  // namespace

ResonantState operator+(const ResonantState& a, const ResonantState& b) {
    check_states(a, b);
    ResonantState out = a;
    for (std::size_t c = 0; c < out.components().size(); ++c)
        for (std::size_t i = 0; i < out.components()[c].size(); ++i)
            out.components()[c][i] += b.components()[c][i];
    return out;
}

ResonantState operator-(const ResonantState& a, const ResonantState& b) {
    check_states(a, b);
    ResonantState out = a;
    for (std::size_t c = 0; c < out.components().size(); ++c)
        for (std::size_t i = 0; i < out.components()[c].size(); ++i)
            out.components()[c][i] -= b.components()[c][i];
    return out;
}

ResonantState operator*(cplx s, const ResonantState& a) {
    ResonantState out = a;
    for (auto& c : out.components())
        for (auto& v : c) v *= s;
    return out;
}

namespace {

// ||v_j||_L2^2 with the torus-volume weight, valid in either representation.
double comp_l2sq(const ResonantState& v, const std::vector<cplx>& c) {
    double acc = 0.0;
    for (const auto& z : c) acc += std::norm(z);
    if (v.repr() == Repr::physical) return acc * v.cell();
    // spectral: sum |coef|^2 * (box area) * (2pi)^2
    return acc * v.box_side() * v.box_side() * kTwoPi * kTwoPi;
}

}  // namespace

double component_l2(const ResonantState& v, LatticePoint j) {
    return std::sqrt(comp_l2sq(v, v.component(j)));
}

double resonant_norm(const ResonantState& v, ResonantNormKind kind, double s, double k, bool half) {
    double acc = 0.0;
    int side = v.side();
    switch (kind) {
        case ResonantNormKind::h1L2:
        case ResonantNormKind::E_ls: {
            for (int f = 0; f < side * side; ++f) {
                LatticePoint j = v.index_point(f);
                double w = 1.0 + double(j.norm2());
                acc += w * comp_l2sq(v, v.components()[f]);
            }
            if (kind == ResonantNormKind::E_ls) return half ? 0.5 * acc : acc;
            return std::sqrt(acc);
        }
        case ResonantNormKind::hsHk: {
            // sum_p <p>^{2s} ||v_p||_{H^k}^2 with H^k on the 2-D box
            ResonantState sp = v;
            if (sp.repr() == Repr::physical) sp.to_spectral_inplace();
            double area = sp.box_side() * sp.box_side() * kTwoPi * kTwoPi;
            for (int f = 0; f < side * side; ++f) {
                LatticePoint j = sp.index_point(f);
                double jw = std::pow(1.0 + double(j.norm2()), s);
                const auto& c = sp.components()[f];
                double comp = 0.0;
                std::size_t p = 0;
                for (int i1 = 0; i1 < sp.nx(); ++i1)
                    for (int i2 = 0; i2 < sp.nx(); ++i2) {
                        double x1 = sp.x_freq(i1), x2 = sp.x_freq(i2);
                        comp += std::pow(1.0 + x1 * x1 + x2 * x2, k) * std::norm(c[p++]);
                    }
                acc += jw * comp * area;
            }
            return std::sqrt(acc);
        }
    }
    throw std::invalid_argument("resonant_norm: unknown kind");
}

double component_l4(const ResonantState& v, LatticePoint j) {
    if (v.repr() != Repr::physical)
        throw std::invalid_argument("component_l4: state must be physical");
    const auto& c = v.component(j);
    double acc = 0.0;
    for (const auto& z : c) {
        double n = std::norm(z);
        acc += n * n;
    }
    return std::pow(acc * v.cell(), 0.25);
}

double state_distance_h1l2(const ResonantState& a, const ResonantState& b) {
    return resonant_norm(a - b, ResonantNormKind::h1L2);
}

double w_norm_estimate(std::span<const ResonantState> samples, double dt_sample) {
    if (samples.empty()) throw std::invalid_argument("w_norm_estimate: empty trajectory");
    const ResonantState& v0 = samples[0];
    int side = v0.side();
    double total = 0.0;
    for (int f = 0; f < side * side; ++f) {
        LatticePoint j = v0.index_point(f);
        double integral = 0.0;
        double prev = 0.0;
        for (std::size_t s = 0; s < samples.size(); ++s) {
            double l4 = component_l4(samples[s], j);
            double val = l4 * l4 * l4 * l4;
            if (s > 0) integral += 0.5 * dt_sample * (prev + val);
            prev = val;
        }
        // L4 over grid x interval, then squared for the W sum
        total += (1.0 + double(j.norm2())) * std::sqrt(integral);
    }
    return std::sqrt(total);
}

ResonantState resonant_from_waveguide(const WaveguideField& f, int trunc) {
    const GridSpec& g = f.spec();
    if (std::abs(g.torus_side - kTwoPi) > 1e-12)
        throw std::invalid_argument("resonant_from_waveguide: torus period must be 2pi");
    if (trunc > (g.my - 1) / 2)
        throw std::invalid_argument("resonant_from_waveguide: trunc exceeds resolved torus modes");
    WaveguideField s = as(f, Repr::spectral);
    ResonantState out(trunc, g.box_side, g.nx, Repr::spectral);
    // Copy each torus-mode slab as the 2-D spectral coefficients of v_p.
    for (int pa = -trunc; pa <= trunc; ++pa)
        for (int pb = -trunc; pb <= trunc; ++pb) {
            int j1 = pa >= 0 ? pa : pa + g.my;
            int j2 = pb >= 0 ? pb : pb + g.my;
            auto& comp = out.component({pa, pb});
            for (int i1 = 0; i1 < g.nx; ++i1)
                for (int i2 = 0; i2 < g.nx; ++i2)
                    comp[std::size_t(i1) * g.nx + i2] = s.at(i1, i2, j1, j2);
        }
    out.to_physical_inplace();
    return out;
}

WaveguideField waveguide_from_resonant(const ResonantState& v, const GridSpec& spec) {
    if (std::abs(spec.torus_side - kTwoPi) > 1e-12)
        throw std::invalid_argument("waveguide_from_resonant: torus period must be 2pi");
    if (v.trunc() > (spec.my - 1) / 2)
        throw std::invalid_argument("waveguide_from_resonant: trunc exceeds resolved torus modes");
    if (v.nx() != spec.nx || std::abs(v.box_side() - spec.box_side) > 1e-12)
        throw std::invalid_argument("waveguide_from_resonant: 2-D grid mismatch");
    ResonantState p = v;
    if (p.repr() == Repr::spectral) p.to_physical_inplace();
    WaveguideField out(spec, Repr::physical);
    int side = p.side();
    for (int f = 0; f < side * side; ++f) {
        LatticePoint q = p.index_point(f);
        const auto& comp = p.components()[f];
        for (int j1 = 0; j1 < spec.my; ++j1)
            for (int j2 = 0; j2 < spec.my; ++j2) {
                double ph = kTwoPi / spec.torus_side *
                            (double(q.a) * spec.y_coord(j1) + double(q.b) * spec.y_coord(j2));
                cplx e(std::cos(ph), std::sin(ph));
                for (int i1 = 0; i1 < spec.nx; ++i1)
                    for (int i2 = 0; i2 < spec.nx; ++i2)
                        out.at(i1, i2, j1, j2) += e * comp[std::size_t(i1) * spec.nx + i2];
            }
    }
    return out;
}

}  // namespace wglab
