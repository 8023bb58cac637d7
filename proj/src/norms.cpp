#include "wglab/norms.hpp"

#include <cmath>
#include <stdexcept>

#include "wglab/bump.hpp"

namespace wglab {

namespace {

// sum over modes of w(freqs) * |c|^2 * volume  (exact for the resolved band)
double spectral_quadratic(const WaveguideField& f,
                          const std::function<double(double, double, double, double)>& w) {
    WaveguideField s = as(f, Repr::spectral);
    const GridSpec& g = s.spec();
    double acc = 0.0;
    std::size_t p = 0;
    std::vector<double> fx(g.nx), fy(g.my);
    for (int i = 0; i < g.nx; ++i) fx[i] = g.x_freq(i);
    for (int j = 0; j < g.my; ++j) fy[j] = g.y_freq(j);
    for (int i1 = 0; i1 < g.nx; ++i1)
        for (int i2 = 0; i2 < g.nx; ++i2)
            for (int j1 = 0; j1 < g.my; ++j1)
                for (int j2 = 0; j2 < g.my; ++j2) {
                    const cplx& c = s.data()[p++];
                    acc += w(fx[i1], fx[i2], fy[j1], fy[j2]) * std::norm(c);
                }
    return acc * g.volume();
}

}  // namespace

double l2_norm(const WaveguideField& f) {
    if (f.repr() == Repr::physical) {
        double acc = 0.0;
        for (const auto& v : f.data()) acc += std::norm(v);
        return std::sqrt(acc * f.spec().cell());
    }
    return std::sqrt(spectral_quadratic(f, [](double, double, double, double) { return 1.0; }));
}

double grad_l2_norm(const WaveguideField& f) {
    return std::sqrt(spectral_quadratic(
        f, [](double a, double b, double c, double d) { return a * a + b * b + c * c + d * d; }));
}

double h1_norm(const WaveguideField& f) {
    return std::sqrt(spectral_quadratic(f, [](double a, double b, double c, double d) {
        return 1.0 + a * a + b * b + c * c + d * d;
    }));
}

double l4_norm(const WaveguideField& f) {
    WaveguideField p = as(f, Repr::physical);
    double acc = 0.0;
    for (const auto& v : p.data()) {
        double n = std::norm(v);
        acc += n * n;
    }
    return std::pow(acc * p.spec().cell(), 0.25);
}

NormReport norm(const WaveguideField& f, NormKind kind, double s1, double s2) {
    switch (kind) {
        case NormKind::mass: {
            double l2 = l2_norm(f);
            return {kind, l2 * l2, 0.0, 0.0};
        }
        case NormKind::h1:
            return {kind, h1_norm(f), 1.0, 1.0};
        case NormKind::h01:
            return {kind, std::sqrt(spectral_quadratic(
                              f, [](double, double, double c, double d) { return 1.0 + c * c + d * d; })),
                    0.0, 1.0};
        case NormKind::hs1s2:
            return {kind,
                    std::sqrt(spectral_quadratic(f,
                                                 [s1, s2](double a, double b, double c, double d) {
                                                     double xi2 = 1.0 + a * a + b * b;
                                                     double n2 = 1.0 + c * c + d * d;
                                                     return std::pow(xi2, s1) * std::pow(n2, s2);
                                                 })),
                    s1, s2};
        case NormKind::l4:
            return {kind, l4_norm(f), 0.0, 0.0};
    }
    throw std::invalid_argument("norm: unknown kind");
}

double l2_distance(const WaveguideField& a, const WaveguideField& b) {
    return l2_norm(a - b);
}

double h1_distance(const WaveguideField& a, const WaveguideField& b) {
    WaveguideField d = as(a, Repr::spectral) - as(b, Repr::spectral);
    return h1_norm(d);
}

int lp_max_level(const GridSpec& spec) {
    double fmax2 = 0.0;
    for (int i = 0; i < spec.nx; ++i) fmax2 = std::max(fmax2, spec.x_freq(i) * spec.x_freq(i));
    double fy2 = 0.0;
    for (int j = 0; j < spec.my; ++j) fy2 = std::max(fy2, spec.y_freq(j) * spec.y_freq(j));
    double rho = std::sqrt(2.0 * fmax2 + 2.0 * fy2);
    int n = 1;
    while (n < rho) n *= 2;
    return n;
}

namespace {
void check_dyadic(int n) {
    if (n < 1 || (n & (n - 1)) != 0) throw std::invalid_argument("lp_project: level must be dyadic");
}
}  // namespace

WaveguideField lp_project(const WaveguideField& f, int n) {
    check_dyadic(n);
    WaveguideField out = as(f, Repr::spectral);
    out.apply_multiplier_inplace([n](double a, double b, double c, double d) {
        return cplx(lp_shell(std::sqrt(a * a + b * b + c * c + d * d), double(n)), 0.0);
    });
    return f.repr() == Repr::physical ? to_physical(out) : out;
}

WaveguideField lp_project_low(const WaveguideField& f, int n) {
    check_dyadic(n);
    WaveguideField out = as(f, Repr::spectral);
    out.apply_multiplier_inplace([n](double a, double b, double c, double d) {
        return cplx(lp_low(std::sqrt(a * a + b * b + c * c + d * d), double(n)), 0.0);
    });
    return f.repr() == Repr::physical ? to_physical(out) : out;
}

WaveguideField lowpass_x(const WaveguideField& f, double theta) {
    if (!(theta > 0)) throw std::invalid_argument("lowpass_x: threshold must be > 0");
    WaveguideField out = as(f, Repr::spectral);
    out.apply_multiplier_inplace([theta](double a, double b, double, double) {
        return cplx(bump(std::sqrt(a * a + b * b) / theta), 0.0);
    });
    return f.repr() == Repr::physical ? to_physical(out) : out;
}

ZNormAccumulator::ZNormAccumulator(const GridSpec& spec) {
    for (int n = 1; n <= lp_max_level(spec); n *= 2) levels_.push_back(n);
}

void ZNormAccumulator::add_sample(double t, const WaveguideField& f) {
    WaveguideField s = as(f, Repr::spectral);
    std::vector<double> row;
    row.reserve(levels_.size());
    for (int n : levels_) {
        double l4 = l4_norm(lp_project(s, n));
        row.push_back(l4 * l4 * l4 * l4);
    }
    times_.push_back(t);
    l4_pow4_.push_back(std::move(row));
}

double ZNormAccumulator::window(double t0, double t1) const {
    // trapezoid over the retained samples inside [t0, t1]
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < times_.size(); ++i)
        if (times_[i] >= t0 - 1e-12 && times_[i] <= t1 + 1e-12) idx.push_back(i);
    if (idx.size() < 2) return 0.0;
    double total = 0.0;
    for (std::size_t s = 0; s < levels_.size(); ++s) {
        double integral = 0.0;
        for (std::size_t k = 0; k + 1 < idx.size(); ++k) {
            double dt = times_[idx[k + 1]] - times_[idx[k]];
            integral += 0.5 * dt * (l4_pow4_[idx[k]][s] + l4_pow4_[idx[k + 1]][s]);
        }
        total += double(levels_[s]) * double(levels_[s]) * integral;
    }
    return std::pow(total, 0.25);
}

double ZNormAccumulator::full() const {
    if (times_.empty()) return 0.0;
    return window(times_.front(), times_.back());
}

double z_norm_estimate(std::span<const WaveguideField> samples, double dt_sample) {
    if (samples.empty()) throw std::invalid_argument("z_norm_estimate: empty trajectory");
    ZNormAccumulator acc(samples[0].spec());
    double t = 0.0;
    for (const auto& f : samples) {
        acc.add_sample(t, f);
        t += dt_sample;
    }
    return acc.full();
}

}  // namespace wglab
