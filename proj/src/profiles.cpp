#include "wglab/profiles.hpp"

#include <chrono>
#include <cmath>
#include <map>
#include <stdexcept>
#include <tuple>

#include "wglab/bump.hpp"
#include "wglab/evolution.hpp"
#include "wglab/norms.hpp"

namespace wglab {

namespace {

bool multiple_of(double value, double unit) {
    double m = value / unit;
    return std::abs(m - std::round(m)) <= 1e-9 * std::max(1.0, std::abs(m));
}

void check_frame_lattice(const GridSpec& g, const FrameElement& fr) {
    if (!multiple_of(fr.x0_1, g.hx()) || !multiple_of(fr.x0_2, g.hx()))
        throw std::invalid_argument("frame_apply: box shift must be a multiple of the grid step");
    if (!multiple_of(fr.y0_1, g.hy()) || !multiple_of(fr.y0_2, g.hy()))
        throw std::invalid_argument("frame_apply: torus shift must be a multiple of the grid step");
    double unit = kTwoPi / g.box_side;
    if (!multiple_of(fr.xi_1, unit) || !multiple_of(fr.xi_2, unit))
        throw std::invalid_argument("frame_apply: xi must lie on the box dual lattice");
}

void modulate_inplace(WaveguideField& f, double xi1, double xi2, double sign) {
    if (xi1 == 0.0 && xi2 == 0.0) return;
    const GridSpec& g = f.spec();
    for (int i1 = 0; i1 < g.nx; ++i1)
        for (int i2 = 0; i2 < g.nx; ++i2) {
            cplx ph = std::polar(1.0, sign * (xi1 * g.x_coord(i1) + xi2 * g.x_coord(i2)));
            for (int j1 = 0; j1 < g.my; ++j1)
                for (int j2 = 0; j2 < g.my; ++j2) f.at(i1, i2, j1, j2) *= ph;
        }
}

void translate_inplace(WaveguideField& spectral, double x1, double x2, double y1, double y2) {
    if (x1 == 0 && x2 == 0 && y1 == 0 && y2 == 0) return;
    spectral.apply_multiplier_inplace([=](double a, double b, double c, double d) {
        return std::polar(1.0, -(a * x1 + b * x2 + c * y1 + d * y2));
    });
}

}  // namespace

WaveguideField frame_apply(const WaveguideField& f, const FrameElement& fr) {
    check_frame_lattice(f.spec(), fr);
    WaveguideField p = as(f, Repr::physical);
    modulate_inplace(p, fr.xi_1, fr.xi_2, +1.0);
    p.to_spectral_inplace();
    if (fr.t0 != 0.0) p = linear_propagate(p, -fr.t0);
    translate_inplace(p, fr.x0_1, fr.x0_2, fr.y0_1, fr.y0_2);
    return f.repr() == Repr::physical ? to_physical(p) : p;
}

WaveguideField frame_apply_inverse(const WaveguideField& f, const FrameElement& fr) {
    check_frame_lattice(f.spec(), fr);
    WaveguideField s = as(f, Repr::spectral);
    translate_inplace(s, -fr.x0_1, -fr.x0_2, -fr.y0_1, -fr.y0_2);
    if (fr.t0 != 0.0) s = linear_propagate(s, fr.t0);
    s.to_physical_inplace();
    modulate_inplace(s, fr.xi_1, fr.xi_2, -1.0);
    return f.repr() == Repr::spectral ? to_spectral(s) : s;
}

FrameElement frame_compose(const FrameElement& a, const FrameElement& b) {
    if (a.xi_1 != 0 || a.xi_2 != 0 || b.xi_1 != 0 || b.xi_2 != 0)
        throw std::invalid_argument("frame_compose: defined for modulation-free frames");
    FrameElement out;
    out.scale = a.scale * b.scale;
    out.t0 = a.t0 + b.t0;
    out.x0_1 = a.x0_1 + b.x0_1;
    out.x0_2 = a.x0_2 + b.x0_2;
    out.y0_1 = a.y0_1 + b.y0_1;
    out.y0_2 = a.y0_2 + b.y0_2;
    return out;
}

GridSpec companion_grid(const GridSpec& base, double n) {
    GridSpec out = base;
    out.box_side = base.box_side * n;
    out.torus_side = base.torus_side * n;
    return out;
}

WaveguideField euclidean_profile(const EuclideanProfileSpec& spec, const GridSpec& target) {
    if (!(spec.n >= 1.0)) throw std::invalid_argument("euclidean_profile: N must be >= 1");
    const GridSpec& cg = spec.phi.spec();
    GridSpec expected = companion_grid(target, spec.n);
    if (cg.nx != expected.nx || cg.my != expected.my ||
        std::abs(cg.box_side - expected.box_side) > 1e-9 * expected.box_side ||
        std::abs(cg.torus_side - expected.torus_side) > 1e-9 * expected.torus_side)
        throw std::invalid_argument("euclidean_profile: phi must live on the scale-N companion grid");
    double support = 2.0 / std::sqrt(spec.n);
    if (support >= 0.5 * std::min(target.box_side, target.torus_side))
        throw std::invalid_argument("euclidean_profile: cutoff support wraps around the torus");

    WaveguideField phi = as(spec.phi, Repr::physical);
    WaveguideField out(target, Repr::physical);
    double rootn = std::sqrt(spec.n);
    for (int i1 = 0; i1 < target.nx; ++i1)
        for (int i2 = 0; i2 < target.nx; ++i2) {
            double x1 = target.x_coord(i1), x2 = target.x_coord(i2);
            for (int j1 = 0; j1 < target.my; ++j1)
                for (int j2 = 0; j2 < target.my; ++j2) {
                    double y1 = target.y_centered(j1), y2 = target.y_centered(j2);
                    double r = std::sqrt(x1 * x1 + x2 * x2 + y1 * y1 + y2 * y2);
                    double cut = bump(rootn * r);
                    if (cut == 0.0) continue;
                    out.at(i1, i2, j1, j2) =
                        spec.n * cut * phi.at(i1, i2, j1, j2);  // phi(N z) at the matched index
                }
        }
    return out;
}

WaveguideField large_scale_profile(const LargeScaleProfileSpec& spec) {
    double m = spec.m;
    if (!(m > 0.0 && m <= 1.0)) throw std::invalid_argument("large_scale_profile: need 0 < M <= 1");
    double l2 = std::log2(m);
    if (std::abs(l2 - std::round(l2)) > 1e-12)
        throw std::invalid_argument("large_scale_profile: M must be a power of two");
    WaveguideField filtered =
        lowpass_x(spec.psi, std::pow(m, -kLargeScaleLowpassExponent));
    WaveguideField phys = as(filtered, Repr::physical);
    GridSpec out_spec = spec.psi.spec();
    out_spec.box_side = spec.psi.spec().box_side / m;
    WaveguideField out(out_spec, Repr::physical);
    for (std::size_t i = 0; i < out.size(); ++i) out.data()[i] = m * phys.data()[i];
    return out;
}

WaveguideField reconstruct_from_resonant(const ResonantState& v, double m, double t,
                                         const GridSpec& target) {
    if (v.trunc() > (target.my - 1) / 2)
        throw std::invalid_argument("reconstruct_from_resonant: truncation exceeds torus modes");
    if (target.nx != v.nx() || std::abs(target.box_side - v.box_side() / m) > 1e-9 * target.box_side)
        throw std::invalid_argument("reconstruct_from_resonant: target grid must be the 1/M-stretched box");
    ResonantState p = v;
    if (p.repr() == Repr::spectral) p.to_physical_inplace();
    WaveguideField out(target, Repr::physical);
    int side = p.side();
    for (int f = 0; f < side * side; ++f) {
        LatticePoint q = p.index_point(f);
        const auto& comp = p.components()[f];
        cplx time_phase = std::polar(1.0, -t * double(q.norm2()));
        for (int j1 = 0; j1 < target.my; ++j1)
            for (int j2 = 0; j2 < target.my; ++j2) {
                double ph = kTwoPi / target.torus_side *
                            (double(q.a) * target.y_coord(j1) + double(q.b) * target.y_coord(j2));
                cplx e = time_phase * std::polar(1.0, ph) * m;
                for (int i1 = 0; i1 < target.nx; ++i1)
                    for (int i2 = 0; i2 < target.nx; ++i2)
                        out.at(i1, i2, j1, j2) += e * comp[std::size_t(i1) * target.nx + i2];
            }
    }
    return out;
}

WaveguideField nonresonant_forcing(const ResonantState& v, double m, double t,
                                   const GridSpec& target) {
    if (target.nx != v.nx() || std::abs(target.box_side - v.box_side() / m) > 1e-9 * target.box_side)
        throw std::invalid_argument("nonresonant_forcing: target grid must be the 1/M-stretched box");
    ResonantState p = v;
    if (p.repr() == Repr::spectral) p.to_physical_inplace();
    const int J = p.trunc();
    const int qmax = (target.my - 1) / 2;
    const std::size_t npts = p.grid_points();

    std::vector<char> nonzero(p.components().size(), 0);
    for (std::size_t c = 0; c < p.components().size(); ++c)
        for (const auto& z : p.components()[c])
            if (z != cplx(0, 0)) {
                nonzero[c] = 1;
                break;
            }

    // Group the momentum-matched non-resonant triples by (q, Phi).
    std::map<std::tuple<std::int64_t, std::int64_t, std::int64_t>, std::vector<cplx>> groups;
    auto flat = [&](LatticePoint pt) {
        return std::size_t(pt.a + J) * p.side() + std::size_t(pt.b + J);
    };
    for (int a1 = -J; a1 <= J; ++a1)
        for (int b1 = -J; b1 <= J; ++b1)
            for (int a2 = -J; a2 <= J; ++a2)
                for (int b2 = -J; b2 <= J; ++b2)
                    for (int a3 = -J; a3 <= J; ++a3)
                        for (int b3 = -J; b3 <= J; ++b3) {
                            LatticePoint p1{a1, b1}, p2{a2, b2}, p3{a3, b3};
                            LatticePoint q = p1 - p2 + p3;
                            if (q.linf() > qmax) continue;
                            std::int64_t phi = p1.norm2() - p2.norm2() + p3.norm2() - q.norm2();
                            if (phi == 0) continue;
                            if (!nonzero[flat(p1)] || !nonzero[flat(p2)] || !nonzero[flat(p3)])
                                continue;
                            auto& acc = groups[{q.a, q.b, phi}];
                            if (acc.empty()) acc.assign(npts, cplx(0, 0));
                            const auto& u1 = p.components()[flat(p1)];
                            const auto& u2 = p.components()[flat(p2)];
                            const auto& u3 = p.components()[flat(p3)];
                            for (std::size_t k = 0; k < npts; ++k)
                                acc[k] += u1[k] * std::conj(u2[k]) * u3[k];
                        }

    WaveguideField out(target, Repr::physical);
    double m3 = m * m * m;
    for (const auto& [key, w] : groups) {
        auto [qa, qb, phi] = key;
        cplx time_phase = std::polar(1.0, -t * double(qa * qa + qb * qb + phi)) * m3;
        for (int j1 = 0; j1 < target.my; ++j1)
            for (int j2 = 0; j2 < target.my; ++j2) {
                double ph = kTwoPi / target.torus_side *
                            (double(qa) * target.y_coord(j1) + double(qb) * target.y_coord(j2));
                cplx e = time_phase * std::polar(1.0, ph);
                for (int i1 = 0; i1 < target.nx; ++i1)
                    for (int i2 = 0; i2 < target.nx; ++i2)
                        out.at(i1, i2, j1, j2) += e * w[std::size_t(i1) * target.nx + i2];
            }
    }
    return out;
}

std::vector<LsApproxRow> ls_approximation_experiment(const WaveguideField& psi,
                                                     const LsApproxParams& params) {
    std::vector<LsApproxRow> rows;
    const GridSpec& base = psi.spec();
    for (double m : params.m_values) {
        auto tick = std::chrono::steady_clock::now();
        WaveguideField psi_star = lowpass_x(psi, std::pow(m, -kLargeScaleLowpassExponent));
        WaveguideField f_m = large_scale_profile({psi, m});
        GridSpec wg = f_m.spec();
        wg.dt = params.dt;

        ResonantState v0 = resonant_from_waveguide(psi_star, params.trunc);
        ResonanceTable table(params.trunc);

        double horizon = params.t0 / (m * m);
        long n = std::lround(horizon / params.dt);
        if (std::abs(double(n) * params.dt - horizon) > 1e-9 * horizon)
            throw std::invalid_argument("ls_approximation_experiment: horizon not a step multiple");
        if (n > params.max_steps)
            throw std::runtime_error("ls_approximation_experiment: step guard exceeded at M=" +
                                     std::to_string(m) + " (" + std::to_string(n) + " steps)");
        long stride = std::max<long>(1, n / params.samples_per_leg);

        NlsStepperConfig pde_cfg{params.dt, params.rho, true};
        ResonantStepperConfig res_cfg{params.dt * m * m, &table, params.rho, true};

        double h1_0 = h1_norm(f_m);
        double sup_err = 0.0;
        double residual_sq = 0.0;

        for (int sign = +1; sign >= -1; sign -= 2) {
            NlsStepperConfig pcfg = pde_cfg;
            pcfg.dt = params.dt * sign;
            ResonantStepperConfig rcfg = res_cfg;
            rcfg.dt = res_cfg.dt * sign;
            WaveguideField u = as(f_m, Repr::spectral);
            ResonantState v = v0;
            long done = 0;
            double prev_f2 = -1.0;
            double prev_t = 0.0;
            while (true) {
                double t = double(sign) * double(done) * params.dt;
                WaveguideField recon = reconstruct_from_resonant(v, m, t, wg);
                sup_err = std::max(sup_err, h1_distance(u, recon));
                WaveguideField forcing = nonresonant_forcing(v, m, t, wg);
                double f_h1 = h1_norm(forcing);
                double f2 = f_h1 * f_h1;
                if (prev_f2 >= 0.0)
                    residual_sq += 0.5 * std::abs(t - prev_t) * (prev_f2 + f2);
                prev_f2 = f2;
                prev_t = t;
                if (done >= n) break;
                long chunk = std::min(stride, n - done);
                for (long s = 0; s < chunk; ++s) u = step_nls(u, pcfg);
                for (long s = 0; s < chunk; ++s) v = step_resonant(v, rcfg);
                done += chunk;
            }
        }
        double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - tick).count();
        rows.push_back({m, horizon, sup_err, h1_0 > 0 ? sup_err / h1_0 : 0.0,
                        std::sqrt(residual_sq), wall});
    }
    return rows;
}

namespace {

// N * values of the companion field at the matched indices, as a field on
// the base grid (the grids are related by the exact x -> N x index map).
WaveguideField transplant_scaled(const WaveguideField& companion_phys, double n,
                                 const GridSpec& base) {
    WaveguideField out(base, Repr::physical);
    for (std::size_t i = 0; i < out.size(); ++i) out.data()[i] = n * companion_phys.data()[i];
    return out;
}

WaveguideField radial_cutoff(const WaveguideField& phys, double radius) {
    const GridSpec& g = phys.spec();
    WaveguideField out = phys;
    for (int i1 = 0; i1 < g.nx; ++i1)
        for (int i2 = 0; i2 < g.nx; ++i2) {
            double x1 = g.x_coord(i1), x2 = g.x_coord(i2);
            for (int j1 = 0; j1 < g.my; ++j1)
                for (int j2 = 0; j2 < g.my; ++j2) {
                    double y1 = g.y_centered(j1), y2 = g.y_centered(j2);
                    double r = std::sqrt(x1 * x1 + x2 * x2 + y1 * y1 + y2 * y2);
                    out.at(i1, i2, j1, j2) *= bump(r / radius);
                }
        }
    return out;
}

}  // namespace

std::vector<EuclidApproxRow> euclidean_approximation_experiment(
    const std::function<cplx(double, double, double, double)>& phi, const GridSpec& base,
    const EuclidApproxParams& params) {
    std::vector<EuclidApproxRow> rows;
    for (double n_scale : params.n_values) {
        auto tick = std::chrono::steady_clock::now();
        GridSpec comp = companion_grid(base, n_scale);
        WaveguideField phi_field = field_from_function(comp, phi);
        WaveguideField f_n = euclidean_profile({phi_field, n_scale}, base);

        double horizon = params.t0 / (n_scale * n_scale);
        long steps = std::lround(params.t0 / params.dt);
        if (std::abs(double(steps) * params.dt - params.t0) > 1e-9 * params.t0)
            throw std::invalid_argument("euclidean_approximation_experiment: t0 not a step multiple");
        if (steps > params.max_steps)
            throw std::runtime_error("euclidean_approximation_experiment: step guard exceeded");
        long stride = std::max<long>(1, steps / params.samples_per_leg);
        double dt_wg = params.dt / (n_scale * n_scale);

        double h1_0 = h1_norm(f_n);
        double sup_err = 0.0;
        double h1_max = h1_0;

        for (int sign = +1; sign >= -1; sign -= 2) {
            NlsStepperConfig wg_cfg{dt_wg * sign, params.rho, true};
            NlsStepperConfig comp_cfg{params.dt * sign, params.rho, true};
            WaveguideField u = as(f_n, Repr::spectral);
            WaveguideField w = as(phi_field, Repr::spectral);
            long done = 0;
            while (true) {
                WaveguideField vrn =
                    transplant_scaled(radial_cutoff(to_physical(w), params.cutoff_radius),
                                      n_scale, base);
                sup_err = std::max(sup_err, h1_distance(u, vrn));
                h1_max = std::max(h1_max, h1_norm(u));
                if (done >= steps) break;
                long chunk = std::min(stride, steps - done);
                for (long s = 0; s < chunk; ++s) u = step_nls(u, wg_cfg);
                for (long s = 0; s < chunk; ++s) w = step_nls(w, comp_cfg);
                done += chunk;
            }
        }
        double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - tick).count();
        rows.push_back({n_scale, horizon, sup_err, h1_0 > 0 ? sup_err / h1_0 : 0.0,
                        h1_0 > 0 ? h1_max / h1_0 : 1.0, wall});
    }
    return rows;
}

}  // namespace wglab
