#include "wglab/diagnostics.hpp"

#include <cmath>
#include <stdexcept>

#include "wglab/bump.hpp"
#include "wglab/norms.hpp"

namespace wglab {

ConservedSet conserved_set(const WaveguideField& f) {
    WaveguideField s = as(f, Repr::spectral);
    const GridSpec& g = s.spec();
    double grad2 = 0.0, px = 0.0, py = 0.0, mass = 0.0;
    std::size_t p = 0;
    for (int i1 = 0; i1 < g.nx; ++i1)
        for (int i2 = 0; i2 < g.nx; ++i2) {
            double f1 = g.x_freq(i1), f2 = g.x_freq(i2);
            for (int j1 = 0; j1 < g.my; ++j1)
                for (int j2 = 0; j2 < g.my; ++j2) {
                    double c1 = g.y_freq(j1), c2 = g.y_freq(j2);
                    double a = std::norm(s.data()[p++]);
                    mass += a;
                    grad2 += (f1 * f1 + f2 * f2 + c1 * c1 + c2 * c2) * a;
                    px += f1 * a;
                    py += f2 * a;
                }
        }
    double vol = g.volume();
    mass *= vol;
    grad2 *= vol;
    px *= vol;
    py *= vol;
    double l4 = l4_norm(f);
    double energy = 0.5 * grad2 + 0.25 * l4 * l4 * l4 * l4;
    return {mass, energy, px, py, 0.5 * mass + energy};
}

namespace {

// Spectral partial derivative along one of the four directions (0..3).
WaveguideField derivative(const WaveguideField& spectral, int axis) {
    WaveguideField out = spectral;
    out.apply_multiplier_inplace([axis](double a, double b, double c, double d) {
        double f[4] = {a, b, c, d};
        return cplx(0.0, f[axis]);
    });
    return out;
}

double wrap_box(double w, double L) {
    while (w >= 0.5 * L) w -= L;
    while (w < -0.5 * L) w += L;
    return w;
}

// Im[conj(u) d_x1 u], pointwise, as a real-valued physical field.
WaveguideField momentum_density(const WaveguideField& f) {
    WaveguideField s = as(f, Repr::spectral);
    WaveguideField du = to_physical(derivative(s, 0));
    WaveguideField u = to_physical(s);
    WaveguideField m = u;
    for (std::size_t i = 0; i < m.size(); ++i) {
        cplx v = std::conj(u.data()[i]) * du.data()[i];
        m.data()[i] = cplx(v.imag(), 0.0);
    }
    return m;
}

}  // namespace

double virial_action(const WaveguideField& f, const VirialConfig& cfg, double t) {
    const GridSpec& g = f.spec();
    if (!(cfg.R > 0)) throw std::invalid_argument("virial_action: R must be > 0");
    if (!(2.0 * cfg.R < 0.5 * g.box_side))
        throw std::invalid_argument("virial_action: cutoff 2R must fit inside half the box");
    WaveguideField m = momentum_density(f);
    double c = cfg.center_path ? cfg.center_path(t) : 0.0;
    double acc = 0.0;
    for (int i1 = 0; i1 < g.nx; ++i1) {
        double w = wrap_box(g.x_coord(i1) - c, g.box_side);
        double weight = bump(std::abs(w) / cfg.R) * w;
        if (weight == 0.0) continue;
        for (int i2 = 0; i2 < g.nx; ++i2)
            for (int j1 = 0; j1 < g.my; ++j1)
                for (int j2 = 0; j2 < g.my; ++j2)
                    acc += weight * m.at(i1, i2, j1, j2).real();
    }
    return acc * g.cell();
}

double momentum_identity_residual(const WaveguideField& prev, const WaveguideField& mid,
                                  const WaveguideField& next, double dt) {
    if (!(dt > 0)) throw std::invalid_argument("momentum_identity_residual: dt must be > 0");
    if (!prev.spec().same_layout(mid.spec()) || !mid.spec().same_layout(next.spec()))
        throw std::invalid_argument("momentum_identity_residual: grid mismatch");

    WaveguideField m_prev = momentum_density(prev);
    WaveguideField m_next = momentum_density(next);

    WaveguideField s = as(mid, Repr::spectral);
    WaveguideField u = to_physical(s);

    // d_x1 Lap (|u|^2 / 2)
    WaveguideField w2 = u;
    for (auto& v : w2.data()) v = cplx(0.5 * std::norm(v), 0.0);
    w2.to_spectral_inplace();
    w2.apply_multiplier_inplace([](double a, double b, double c, double d) {
        return cplx(0.0, a) * (-(a * a + b * b + c * c + d * d));
    });
    WaveguideField term_a = to_physical(w2);

    // -2 div Re[d_x1 conj(u) grad u]
    WaveguideField d1 = to_physical(derivative(s, 0));
    WaveguideField div(mid.spec(), Repr::physical);
    for (int axis = 0; axis < 4; ++axis) {
        WaveguideField gj = to_physical(derivative(s, axis));
        WaveguideField prod = u;
        for (std::size_t i = 0; i < prod.size(); ++i) {
            cplx v = std::conj(d1.data()[i]) * gj.data()[i];
            prod.data()[i] = cplx(v.real(), 0.0);
        }
        prod.to_spectral_inplace();
        prod = derivative(prod, axis);
        WaveguideField dp = to_physical(prod);
        for (std::size_t i = 0; i < div.size(); ++i) div.data()[i] += dp.data()[i];
    }

    // -1/4 d_x1 |u|^4
    WaveguideField w4 = u;
    for (auto& v : w4.data()) {
        double n = std::norm(v);
        v = cplx(n * n, 0.0);
    }
    w4.to_spectral_inplace();
    w4 = derivative(w4, 0);
    WaveguideField term_c = to_physical(w4);

    WaveguideField residual(mid.spec(), Repr::physical);
    double inv2dt = 1.0 / (2.0 * dt);
    for (std::size_t i = 0; i < residual.size(); ++i) {
        double lhs = (m_next.data()[i].real() - m_prev.data()[i].real()) * inv2dt;
        double rhs = term_a.data()[i].real() - 2.0 * div.data()[i].real() -
                     0.25 * term_c.data()[i].real();
        residual.data()[i] = cplx(lhs - rhs, 0.0);
    }
    return l2_norm(residual);
}

double strichartz_quotient(const WaveguideField& u0, const StrichartzProbeConfig& cfg) {
    if (!(cfg.p > 10.0 / 3.0 + 1e-12))
        throw std::invalid_argument("strichartz_quotient: p must exceed 10/3");
    if (std::abs(1.0 / cfg.p + 1.0 / cfg.q - 0.5) > 1e-12)
        throw std::invalid_argument("strichartz_quotient: need 1/q + 1/p = 1/2");
    if (cfg.n_level < 1 || (cfg.n_level & (cfg.n_level - 1)) != 0)
        throw std::invalid_argument("strichartz_quotient: N must be dyadic");
    if (cfg.windows < 1 || cfg.samples_per_window < 2)
        throw std::invalid_argument("strichartz_quotient: bad window sampling");
    double u0_l2 = l2_norm(u0);
    if (u0_l2 == 0.0) throw std::invalid_argument("strichartz_quotient: zero input");

    WaveguideField g = lp_project_low(as(u0, Repr::spectral), cfg.n_level);
    const GridSpec& grid = g.spec();
    double cell = grid.cell();
    double lq_sum = 0.0;
    for (int gamma = 0; gamma < cfg.windows; ++gamma) {
        double t0 = kTwoPi * gamma;
        double dt = kTwoPi / (cfg.samples_per_window - 1);
        double integral = 0.0;
        for (int s = 0; s < cfg.samples_per_window; ++s) {
            WaveguideField ut = to_physical(linear_propagate(g, t0 + s * dt));
            double lp = 0.0;
            for (const auto& v : ut.data()) lp += std::pow(std::abs(v), cfg.p);
            lp *= cell;
            double w = (s == 0 || s == cfg.samples_per_window - 1) ? 0.5 : 1.0;
            integral += w * dt * lp;
        }
        lq_sum += std::pow(integral, cfg.q / cfg.p);
    }
    double norm_lq_lp = std::pow(lq_sum, 1.0 / cfg.q);
    double scale = std::pow(double(cfg.n_level), 2.0 - 6.0 / cfg.p);
    return norm_lq_lp / (scale * u0_l2);
}

ScatteringExtract scattering_extract(const WaveguideField& u_t1, double t1,
                                     const WaveguideField& u_t2, double t2) {
    WaveguideField b1 = linear_propagate(as(u_t1, Repr::spectral), -t1);
    WaveguideField b2 = linear_propagate(as(u_t2, Repr::spectral), -t2);
    return {b2, h1_distance(b1, b2)};
}

ResonantScatteringExtract resonant_scattering_extract(const ResonantState& v_t1, double t1,
                                                      const ResonantState& v_t2, double t2) {
    ResonantState b1 = linear_propagate_resonant(v_t1, -t1);
    ResonantState b2 = linear_propagate_resonant(v_t2, -t2);
    return {b2, state_distance_h1l2(b1, b2)};
}

}  // namespace wglab
