#include "wglab/evolution.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "wglab/norms.hpp"

namespace wglab {

namespace {

long step_count(double T, double dt) {
    double a = std::abs(T);
    long n = std::lround(a / dt);
    if (std::abs(double(n) * dt - a) > 1e-9 * std::max(1.0, a))
        throw std::invalid_argument("evolve: T must be an integer number of dt steps");
    return n;
}

void linear_phase_inplace(WaveguideField& f, double t) {
    f.apply_multiplier_inplace([t](double a, double b, double c, double d) {
        return std::polar(1.0, -t * (a * a + b * b + c * c + d * d));
    });
}

void nonlinear_phase_inplace(WaveguideField& f, double coeff) {
    for (auto& v : f.data()) v *= std::polar(1.0, -coeff * std::norm(v));
}

}  // namespace

WaveguideField linear_propagate(const WaveguideField& f, double t) {
    WaveguideField s = as(f, Repr::spectral);
    linear_phase_inplace(s, t);
    return f.repr() == Repr::physical ? to_physical(s) : s;
}

void dealias_inplace(WaveguideField& f) {
    if (f.repr() != Repr::spectral) throw std::invalid_argument("dealias: field must be spectral");
    const GridSpec& g = f.spec();
    const int kx = g.nx / 3;
    const int ky = g.my / 3;
    std::size_t p = 0;
    for (int i1 = 0; i1 < g.nx; ++i1)
        for (int i2 = 0; i2 < g.nx; ++i2)
            for (int j1 = 0; j1 < g.my; ++j1)
                for (int j2 = 0; j2 < g.my; ++j2) {
                    bool kill = std::abs(g.x_index(i1)) > kx || std::abs(g.x_index(i2)) > kx ||
                                std::abs(g.y_index(j1)) > ky || std::abs(g.y_index(j2)) > ky;
                    if (kill) f.data()[p] = cplx(0, 0);
                    ++p;
                }
}

namespace {

// One Strang step on a spectral field, in place.
void step_nls_spectral_inplace(WaveguideField& f, const NlsStepperConfig& cfg) {
    linear_phase_inplace(f, 0.5 * cfg.dt);
    if (cfg.rho != 0.0) {
        f.to_physical_inplace();
        nonlinear_phase_inplace(f, cfg.dt * cfg.rho);
        f.to_spectral_inplace();
        if (cfg.dealias) dealias_inplace(f);
    }
    linear_phase_inplace(f, 0.5 * cfg.dt);
}

}  // namespace

WaveguideField step_nls(const WaveguideField& f, const NlsStepperConfig& cfg) {
    WaveguideField s = as(f, Repr::spectral);
    step_nls_spectral_inplace(s, cfg);
    if (!s.finite()) throw std::runtime_error("step_nls: non-finite field after step");
    return f.repr() == Repr::physical ? to_physical(s) : s;
}

namespace {

DiagnosticsRecord make_nls_record(long step, double t, const WaveguideField& spectral) {
    ConservedSet c = conserved_set(spectral);
    return {step, t, c.mass, c.energy, c.momentum_x1, c.momentum_x2, c.full_energy, std::nullopt};
}

}  // namespace

NlsEvolveResult evolve_nls(const WaveguideField& f0, double T, const NlsStepperConfig& cfg,
                           long record_stride, const FieldObserver& observer) {
    if (record_stride < 1) throw std::invalid_argument("evolve_nls: record_stride < 1");
    long n = step_count(T, cfg.dt);
    NlsStepperConfig step_cfg = cfg;
    step_cfg.dt = T < 0 ? -cfg.dt : cfg.dt;
    WaveguideField cur = as(f0, Repr::spectral);
    NlsEvolveResult result{cur, {}};
    auto emit = [&](long step, double t) {
        result.records.push_back(make_nls_record(step, t, cur));
        if (observer) observer(step, t, to_physical(cur));
    };
    emit(0, 0.0);
    for (long s = 1; s <= n; ++s) {
        step_nls_spectral_inplace(cur, step_cfg);
        if (!cur.finite())
            throw std::runtime_error("evolve_nls: non-finite field at step " + std::to_string(s));
        if (s % record_stride == 0 || s == n) emit(s, double(s) * step_cfg.dt);
    }
    result.final = cur;
    return result;
}

ResonantState resonant_rhs(const ResonantState& v, const ResonanceTable& table) {
    if (table.trunc() < v.trunc())
        throw std::invalid_argument("resonant_rhs: table truncation below state truncation");
    if (v.repr() != Repr::physical)
        throw std::invalid_argument("resonant_rhs: state must be physical");
    const int J = v.trunc();
    const std::size_t npts = v.grid_points();
    ResonantState out(J, v.box_side(), v.nx());

    std::vector<char> nonzero(v.components().size(), 0);
    for (std::size_t c = 0; c < v.components().size(); ++c)
        for (const auto& z : v.components()[c])
            if (z != cplx(0, 0)) {
                nonzero[c] = 1;
                break;
            }
    auto flat = [&](LatticePoint p) {
        return std::size_t(p.a + J) * v.side() + std::size_t(p.b + J);
    };

    for (int fj = 0; fj < v.side() * v.side(); ++fj) {
        LatticePoint j = v.index_point(fj);
        auto& acc = out.components()[fj];
        for (const auto& tr : table.triples(j)) {
            if (tr.j1.linf() > J || tr.j2.linf() > J || tr.j3.linf() > J) continue;
            std::size_t f1 = flat(tr.j1), f2 = flat(tr.j2), f3 = flat(tr.j3);
            if (!nonzero[f1] || !nonzero[f2] || !nonzero[f3]) continue;
            const auto& u1 = v.components()[f1];
            const auto& u2 = v.components()[f2];
            const auto& u3 = v.components()[f3];
            for (std::size_t p = 0; p < npts; ++p) acc[p] += u1[p] * std::conj(u2[p]) * u3[p];
        }
    }
    return out;
}

namespace {

void linear_resonant_inplace(ResonantState& v, double t) {
    bool was_physical = v.repr() == Repr::physical;
    if (was_physical) v.to_spectral_inplace();
    const int nx = v.nx();
    for (auto& c : v.components()) {
        std::size_t p = 0;
        for (int i1 = 0; i1 < nx; ++i1)
            for (int i2 = 0; i2 < nx; ++i2) {
                double x1 = v.x_freq(i1), x2 = v.x_freq(i2);
                c[p++] *= std::polar(1.0, -t * (x1 * x1 + x2 * x2));
            }
    }
    if (was_physical) v.to_physical_inplace();
}

void axpy(ResonantState& y, double a, const ResonantState& x) {
    for (std::size_t c = 0; c < y.components().size(); ++c)
        for (std::size_t p = 0; p < y.components()[c].size(); ++p)
            y.components()[c][p] += a * x.components()[c][p];
}

}  // namespace

ResonantState linear_propagate_resonant(const ResonantState& v, double t) {
    ResonantState out = v;
    linear_resonant_inplace(out, t);
    return out;
}

void dealias_x_inplace(ResonantState& v) {
    bool was_physical = v.repr() == Repr::physical;
    if (was_physical) v.to_spectral_inplace();
    const int nx = v.nx();
    const int kx = nx / 3;
    for (auto& c : v.components()) {
        std::size_t p = 0;
        for (int i1 = 0; i1 < nx; ++i1)
            for (int i2 = 0; i2 < nx; ++i2) {
                int s1 = i1 < nx / 2 ? i1 : i1 - nx;
                int s2 = i2 < nx / 2 ? i2 : i2 - nx;
                if (std::abs(s1) > kx || std::abs(s2) > kx) c[p] = cplx(0, 0);
                ++p;
            }
    }
    if (was_physical) v.to_physical_inplace();
}

ResonantState step_resonant(const ResonantState& v, const ResonantStepperConfig& cfg) {
    if (!cfg.table) throw std::invalid_argument("step_resonant: missing resonance table");
    if (v.repr() != Repr::physical)
        throw std::invalid_argument("step_resonant: state must be physical");
    const double h = cfg.dt;
    auto nonlin = [&](const ResonantState& u) {
        if (cfg.rho == 0.0) return ResonantState(u.trunc(), u.box_side(), u.nx());
        ResonantState r = resonant_rhs(u, *cfg.table);
        for (auto& c : r.components())
            for (auto& z : c) z *= cplx(0, -cfg.rho);
        if (cfg.dealias) dealias_x_inplace(r);
        return r;
    };

    // RK4 in the interaction picture: the half-step propagator moves the
    // stage values between frames so the linear flow is exact.
    ResonantState u_i = v;
    linear_resonant_inplace(u_i, 0.5 * h);
    ResonantState k1 = nonlin(v);
    linear_resonant_inplace(k1, 0.5 * h);

    ResonantState stage = u_i;
    axpy(stage, 0.5 * h, k1);
    ResonantState k2 = nonlin(stage);

    stage = u_i;
    axpy(stage, 0.5 * h, k2);
    ResonantState k3 = nonlin(stage);

    stage = u_i;
    axpy(stage, h, k3);
    linear_resonant_inplace(stage, 0.5 * h);
    ResonantState k4 = nonlin(stage);

    ResonantState out = u_i;
    axpy(out, h / 6.0, k1);
    axpy(out, h / 3.0, k2);
    axpy(out, h / 3.0, k3);
    linear_resonant_inplace(out, 0.5 * h);
    axpy(out, h / 6.0, k4);
    if (!out.finite()) throw std::runtime_error("step_resonant: non-finite state after step");
    return out;
}

namespace {

DiagnosticsRecord make_resonant_record(long step, double t, const ResonantState& v) {
    double h0 = 0.0;
    for (int f = 0; f < v.side() * v.side(); ++f) {
        double l2 = component_l2(v, v.index_point(f));
        h0 += l2 * l2;
    }
    double els = resonant_norm(v, ResonantNormKind::E_ls);
    double nan = std::nan("");
    return {step, t, h0, nan, nan, nan, nan, els};
}

}  // namespace

ResonantEvolveResult evolve_resonant(const ResonantState& v0, double T,
                                     const ResonantStepperConfig& cfg, long record_stride,
                                     const StateObserver& observer) {
    if (record_stride < 1) throw std::invalid_argument("evolve_resonant: record_stride < 1");
    long n = step_count(T, cfg.dt);
    ResonantStepperConfig step_cfg = cfg;
    step_cfg.dt = T < 0 ? -cfg.dt : cfg.dt;
    ResonantState cur = v0;
    if (cur.repr() == Repr::spectral) cur.to_physical_inplace();
    ResonantEvolveResult result{cur, {}};
    auto emit = [&](long step, double t) {
        result.records.push_back(make_resonant_record(step, t, cur));
        if (observer) observer(step, t, cur);
    };
    emit(0, 0.0);
    for (long s = 1; s <= n; ++s) {
        cur = step_resonant(cur, step_cfg);
        if (s % record_stride == 0 || s == n) emit(s, double(s) * step_cfg.dt);
    }
    result.final = cur;
    return result;
}

WaveguideField galilean_boost(const WaveguideField& f, double xi0_1, double xi0_2, double t) {
    const GridSpec& g = f.spec();
    double unit = kTwoPi / g.box_side;
    auto on_lattice = [unit](double xi) {
        double m = xi / unit;
        return std::abs(m - std::round(m)) <= 1e-9 * std::max(1.0, std::abs(m));
    };
    if (!on_lattice(xi0_1) || !on_lattice(xi0_2))
        throw std::invalid_argument("galilean_boost: xi0 must lie on the box dual lattice");

    WaveguideField s = as(f, Repr::spectral);
    if (t != 0.0) {
        double a1 = 2.0 * xi0_1 * t, a2 = 2.0 * xi0_2 * t;
        s.apply_multiplier_inplace([a1, a2](double fx1, double fx2, double, double) {
            return std::polar(1.0, -(fx1 * a1 + fx2 * a2));
        });
    }
    s.to_physical_inplace();
    double c0 = -(xi0_1 * xi0_1 + xi0_2 * xi0_2) * t;
    for (int i1 = 0; i1 < g.nx; ++i1)
        for (int i2 = 0; i2 < g.nx; ++i2) {
            cplx ph = std::polar(1.0, c0 + xi0_1 * g.x_coord(i1) + xi0_2 * g.x_coord(i2));
            for (int j1 = 0; j1 < g.my; ++j1)
                for (int j2 = 0; j2 < g.my; ++j2) s.at(i1, i2, j1, j2) *= ph;
        }
    return f.repr() == Repr::spectral ? to_spectral(s) : s;
}

RescaledField rescale_solution(const WaveguideField& f, double lam) {
    if (!(lam > 0)) throw std::invalid_argument("rescale_solution: lam must be > 0");
    double l2 = std::log2(lam);
    if (std::abs(l2 - std::round(l2)) > 1e-12)
        throw std::invalid_argument("rescale_solution: lam must be a power of two");
    GridSpec out_spec = f.spec();
    out_spec.box_side = f.spec().box_side / lam;
    out_spec.torus_side = f.spec().torus_side / lam;
    out_spec.dt = f.spec().dt / (lam * lam);
    WaveguideField out(out_spec, f.repr());
    for (std::size_t i = 0; i < out.size(); ++i) out.data()[i] = lam * f.data()[i];
    return {out, out_spec};
}

}  // namespace wglab
