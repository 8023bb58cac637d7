#include <doctest.h>

#include <cmath>

#include "scalar2d_oracle.hpp"
#include "wglab/diagnostics.hpp"
#include "wglab/evolution.hpp"
#include "wglab/norms.hpp"
#include "wglab/rng.hpp"

using namespace wglab;

namespace {

GridSpec small_grid() {
    GridSpec g;
    g.box_side = 16.0;
    g.nx = 32;
    g.my = 3;
    g.dt = 2e-3;
    return g;
}

// Concentrated modulated bump, H^1-normalized.
WaveguideField bump_data(const GridSpec& g, double h1_target, double width) {
    WaveguideField f = field_from_function(g, [&](double x1, double x2, double y1, double) {
        double r2 = (x1 * x1 + x2 * x2) / (width * width);
        cplx env = std::exp(-r2) * (1.0 + 0.4 * std::polar(1.0, y1));
        return env * std::polar(1.0, kTwoPi / g.box_side * x1);
    });
    return cplx(h1_target / h1_norm(f), 0.0) * f;
}

ResonantState gaussian_state(int trunc, double L, int nx) {
    ResonantState v(trunc, L, nx);
    for (int i1 = 0; i1 < nx; ++i1)
        for (int i2 = 0; i2 < nx; ++i2) {
            double x1 = v.x_coord(i1), x2 = v.x_coord(i2);
            double ga = std::exp(-(x1 * x1 + x2 * x2) / 4.0);
            std::size_t p = std::size_t(i1) * nx + i2;
            v.component({0, 0})[p] = ga;
            if (trunc >= 1) {
                v.component({1, 0})[p] = 0.7 * ga * std::polar(1.0, 0.3 * x1);
                v.component({0, -1})[p] = cplx(0, 0.5) * ga;
            }
        }
    return v;
}

}  // namespace

TEST_CASE("linear propagator basics") {
    GridSpec g = small_grid();
    Rng rng(3);
    WaveguideField f = random_band_limited(g, rng, 4.0);

    SUBCASE("t = 0 is the identity") {
        CHECK(l2_distance(linear_propagate(f, 0.0), f) == 0.0);
    }
    SUBCASE("plane wave picks up the eigenvalue phase") {
        WaveguideField pw = plane_wave(g, 0, 0, 1, 0);
        WaveguideField moved = linear_propagate(pw, M_PI);  // phase e^{-i pi} = -1
        CHECK(l2_distance(moved, cplx(-1, 0) * pw) / l2_norm(pw) <= 1e-12);
    }
    SUBCASE("unitarity") {
        CHECK(std::abs(l2_norm(linear_propagate(f, 1.7)) - l2_norm(f)) / l2_norm(f) <= 1e-12);
    }
    SUBCASE("group property") {
        WaveguideField a = linear_propagate(linear_propagate(f, 0.9), 0.6);
        WaveguideField b = linear_propagate(f, 1.5);
        CHECK(l2_distance(a, b) / l2_norm(f) <= 1e-12);
    }
    SUBCASE("commutes with Littlewood-Paley shells") {
        WaveguideField a = linear_propagate(lp_project(f, 2), 0.8);
        WaveguideField b = lp_project(linear_propagate(f, 0.8), 2);
        CHECK(l2_distance(a, b) / l2_norm(f) <= 1e-13);
    }
}

TEST_CASE("step_nls basics") {
    GridSpec g = small_grid();
    NlsStepperConfig cfg{g.dt, 1.0, true};

    SUBCASE("zero stays zero") {
        WaveguideField z(g, Repr::physical);
        CHECK(l2_norm(step_nls(z, cfg)) == 0.0);
    }
    SUBCASE("constant field reduces to the phase ODE") {
        cplx c{0.8, -0.3};
        WaveguideField f = field_from_function(g, [c](double, double, double, double) { return c; });
        WaveguideField g1 = step_nls(f, cfg);
        cplx ratio = g1.data()[0] / c;
        // i u_t = |u|^2 u: modulus fixed, phase decreases at rate |c|^2
        CHECK(std::abs(std::abs(ratio) - 1.0) <= 1e-13);
        CHECK(std::arg(ratio) == doctest::Approx(-cfg.dt * std::norm(c)).epsilon(1e-10));
        for (const auto& v : g1.data()) CHECK(std::abs(v - g1.data()[0]) <= 1e-13);
    }
    SUBCASE("mass drift over 1000 steps stays at rounding scale") {
        WaveguideField u0 = bump_data(g, 0.5, 1.0);
        auto res = evolve_nls(u0, 1000 * g.dt, cfg, 100);
        double m0 = res.records.front().mass;
        for (const auto& r : res.records) CHECK(std::abs(r.mass - m0) / m0 <= 1e-10);
    }
    SUBCASE("non-finite input aborts with diagnostic") {
        WaveguideField f(g, Repr::physical);
        f.at(0, 0, 0, 0) = cplx(std::numeric_limits<double>::infinity(), 0);
        CHECK_THROWS_AS(step_nls(f, cfg), std::runtime_error);
    }
}

TEST_CASE("energy drift is second order in dt") {
    GridSpec g = small_grid();
    WaveguideField u0 = bump_data(g, 0.5, 1.0);
    auto drift = [&](double dt, long stride) {
        NlsStepperConfig cfg{dt, 1.0, true};
        auto res = evolve_nls(u0, 0.5, cfg, stride);
        double e0 = res.records.front().energy, worst = 0.0;
        for (const auto& r : res.records) worst = std::max(worst, std::abs(r.energy - e0));
        return worst / e0;
    };
    double d1 = drift(2e-3, 10);
    double d2 = drift(1e-3, 20);
    CHECK(d1 / d2 >= 3.4);
    CHECK(d1 / d2 <= 4.6);
}

TEST_CASE("momentum is conserved over unit time") {
    GridSpec g = small_grid();
    WaveguideField u0 = bump_data(g, 0.5, 1.0);
    NlsStepperConfig cfg{g.dt, 1.0, true};
    auto res = evolve_nls(u0, 1.0, cfg, 50);
    double p0 = std::hypot(res.records.front().momentum_x1, res.records.front().momentum_x2);
    for (const auto& r : res.records) {
        double dp = std::hypot(r.momentum_x1 - res.records.front().momentum_x1,
                               r.momentum_x2 - res.records.front().momentum_x2);
        CHECK(dp / p0 <= 1e-8);
    }
}

TEST_CASE("small-amplitude runs approach the linear flow at cubic rate") {
    GridSpec g = small_grid();
    WaveguideField shape = bump_data(g, 1.0, 1.5);
    double T = 0.25;
    NlsStepperConfig cfg{g.dt, 1.0, true};
    auto deviation = [&](double amp) {
        WaveguideField u0 = cplx(amp, 0) * shape;
        auto res = evolve_nls(u0, T, cfg, 1000000);
        WaveguideField lin = linear_propagate(u0, T);
        return l2_distance(res.final, as(lin, Repr::spectral));
    };
    double da = deviation(0.2);
    double db = deviation(0.1);
    CHECK(da / db >= 6.0);
    CHECK(da / db <= 10.0);
}

TEST_CASE("evolve_nls on zero data produces all-zero records") {
    GridSpec g = small_grid();
    WaveguideField z(g, Repr::physical);
    NlsStepperConfig cfg{g.dt, 1.0, true};
    auto res = evolve_nls(z, 10 * g.dt, cfg, 1);
    CHECK(res.records.size() == 11);  // initial state plus one per step
    for (const auto& r : res.records) {
        CHECK(r.mass == 0.0);
        CHECK(r.energy == 0.0);
        CHECK(r.full_energy == 0.0);
    }
}

TEST_CASE("time reversibility of the Strang step") {
    GridSpec g = small_grid();
    WaveguideField u0 = bump_data(g, 1.0, 1.0);
    NlsStepperConfig fwd{g.dt, 1.0, true}, bwd{-g.dt, 1.0, true};
    WaveguideField u = as(u0, Repr::spectral);
    for (int s = 0; s < 10; ++s) u = step_nls(u, fwd);
    for (int s = 0; s < 10; ++s) u = step_nls(u, bwd);
    CHECK(h1_distance(u, as(u0, Repr::spectral)) / h1_norm(u0) <= 1e-9);
}

TEST_CASE("resonant_rhs examples") {
    ResonanceTable table(1);

    SUBCASE("single-component state reduces to the scalar cubic term") {
        ResonantState v = gaussian_state(0, 16.0, 32);
        ResonantState full(1, 16.0, 32);
        full.component({0, 0}) = v.component({0, 0});
        ResonantState r = resonant_rhs(full, table);
        for (int f = 0; f < full.side() * full.side(); ++f) {
            LatticePoint j = full.index_point(f);
            if (j == LatticePoint{0, 0}) continue;
            for (const auto& z : r.components()[f]) CHECK(z == cplx(0, 0));
        }
        const auto& u = full.component({0, 0});
        const auto& out = r.component({0, 0});
        for (std::size_t i = 0; i < u.size(); ++i)
            CHECK(std::abs(out[i] - u[i] * std::conj(u[i]) * u[i]) <= 1e-15);
    }
    SUBCASE("zero state maps to zero") {
        ResonantState z(1, 16.0, 32);
        ResonantState r = resonant_rhs(z, table);
        for (const auto& c : r.components())
            for (const auto& v : c) CHECK(v == cplx(0, 0));
    }
    SUBCASE("conjugation symmetry") {
        ResonantState v = gaussian_state(1, 16.0, 32);
        ResonantState vc = v;
        for (auto& c : vc.components())
            for (auto& z : c) z = std::conj(z);
        ResonantState a = resonant_rhs(vc, table);
        ResonantState b = resonant_rhs(v, table);
        double worst = 0.0;
        for (int f = 0; f < v.side() * v.side(); ++f)
            for (std::size_t i = 0; i < a.components()[f].size(); ++i)
                worst = std::max(worst,
                                 std::abs(a.components()[f][i] - std::conj(b.components()[f][i])));
        CHECK(worst <= 1e-14);
    }
    SUBCASE("truncation mismatch is rejected") {
        ResonantState v = gaussian_state(2, 16.0, 32);
        CHECK_THROWS_AS(resonant_rhs(v, table), std::invalid_argument);
    }
}

TEST_CASE("step_resonant zero state and reversibility") {
    ResonanceTable table(1);
    ResonantStepperConfig cfg{2e-2, &table, 1.0, true};
    ResonantState z(1, 16.0, 32);
    ResonantState sz = step_resonant(z, cfg);
    for (const auto& c : sz.components())
        for (const auto& v : c) CHECK(v == cplx(0, 0));

    ResonantState v0 = gaussian_state(1, 16.0, 32);
    ResonantStepperConfig bwd = cfg;
    bwd.dt = -cfg.dt;
    ResonantState v = v0;
    for (int s = 0; s < 5; ++s) v = step_resonant(v, cfg);
    for (int s = 0; s < 5; ++s) v = step_resonant(v, bwd);
    CHECK(state_distance_h1l2(v, v0) / resonant_norm(v0, ResonantNormKind::h1L2) <= 1e-9);
}

TEST_CASE("single-component stepping matches the scalar oracle per step") {
    ResonanceTable table(1);
    double L = 16.0;
    int nx = 32;
    ResonantState v(1, L, nx);
    wglab_test::Scalar2d scalar(L, nx);
    for (int i1 = 0; i1 < nx; ++i1)
        for (int i2 = 0; i2 < nx; ++i2) {
            double x1 = v.x_coord(i1), x2 = v.x_coord(i2);
            cplx val = std::exp(-(x1 * x1 + x2 * x2) / 4.0) * std::polar(1.0, 0.5 * x1);
            v.component({0, 0})[std::size_t(i1) * nx + i2] = val;
            scalar.data[std::size_t(i1) * nx + i2] = val;
        }
    ResonantStepperConfig cfg{1e-2, &table, 1.0, false};
    for (int s = 0; s < 20; ++s) {
        v = step_resonant(v, cfg);
        wglab_test::scalar_step(scalar, cfg.dt);
        double worst = 0.0;
        for (std::size_t i = 0; i < scalar.data.size(); ++i)
            worst = std::max(worst, std::abs(v.component({0, 0})[i] - scalar.data[i]));
        CHECK(worst <= 1e-10);
    }
}

TEST_CASE("E_ls and h1L2 drift at fourth order") {
    ResonanceTable table(1);
    ResonantState v0 = gaussian_state(1, 16.0, 32);
    auto drift = [&](double dt) {
        ResonantStepperConfig cfg{dt, &table, 1.0, true};
        auto res = evolve_resonant(v0, 0.4, cfg, 2);
        double e0 = *res.records.front().e_ls, worst = 0.0;
        for (const auto& r : res.records) worst = std::max(worst, std::abs(*r.e_ls - e0));
        return worst / e0;
    };
    double d1 = drift(4e-2);
    double d2 = drift(2e-2);
    CHECK(d1 / d2 >= 14.0);
    CHECK(d1 / d2 <= 18.0);
}

TEST_CASE("galilean boost") {
    GridSpec g = small_grid();
    WaveguideField f = bump_data(g, 1.0, 1.5);
    double unit = kTwoPi / g.box_side;

    SUBCASE("xi0 = 0 is the identity") {
        CHECK(l2_distance(galilean_boost(f, 0, 0, 1.3), f) <= 1e-13 * l2_norm(f));
    }
    SUBCASE("t = 0 is a pure modulation: mass unchanged") {
        WaveguideField b = galilean_boost(f, unit, 2 * unit, 0.0);
        CHECK(std::abs(l2_norm(b) - l2_norm(f)) / l2_norm(f) <= 1e-12);
        for (std::size_t i = 0; i < f.size(); ++i)
            CHECK(std::abs(std::abs(b.data()[i]) - std::abs(f.data()[i])) <= 1e-12);
    }
    SUBCASE("off-lattice frequency is rejected") {
        CHECK_THROWS_AS(galilean_boost(f, 0.5 * unit, 0, 0.0), std::invalid_argument);
    }
    SUBCASE("boost covariance of the nonlinear flow") {
        double T = 0.1;
        NlsStepperConfig cfg{g.dt, 1.0, true};
        auto evolved = evolve_nls(f, T, cfg, 1000000);
        WaveguideField lhs = galilean_boost(to_physical(evolved.final), unit, 0, T);
        auto rhs = evolve_nls(galilean_boost(f, unit, 0, 0.0), T, cfg, 1000000);
        double dev = h1_distance(lhs, to_physical(rhs.final)) / h1_norm(f);
        CHECK(dev <= g.dt * g.dt);
    }
}

TEST_CASE("rescale_solution") {
    GridSpec g = small_grid();
    WaveguideField f = bump_data(g, 1.0, 1.5);

    SUBCASE("lam = 1 is the identity") {
        auto r = rescale_solution(f, 1.0);
        CHECK(r.spec == g);
        CHECK(l2_distance(r.field, f) == 0.0);
    }
    SUBCASE("mass scales by lam^-2 and the gradient norm is invariant") {
        auto r = rescale_solution(f, 2.0);
        CHECK(r.spec.box_side == doctest::Approx(g.box_side / 2.0));
        CHECK(r.spec.torus_side == doctest::Approx(g.torus_side / 2.0));
        double m_in = norm(f, NormKind::mass).value;
        double m_out = norm(r.field, NormKind::mass).value;
        CHECK(m_out == doctest::Approx(0.25 * m_in).epsilon(1e-10));
        CHECK(grad_l2_norm(r.field) == doctest::Approx(grad_l2_norm(f)).epsilon(1e-10));
    }
    SUBCASE("non-power-of-two is rejected") {
        CHECK_THROWS_AS(rescale_solution(f, 3.0), std::invalid_argument);
    }
}
