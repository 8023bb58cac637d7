#include <doctest.h>

#include <cmath>
#include <filesystem>

#include "wglab/field.hpp"
#include "wglab/norms.hpp"
#include "wglab/resonant.hpp"
#include "wglab/rng.hpp"

using namespace wglab;

namespace {

GridSpec small_grid() {
    GridSpec g;
    g.box_side = 16.0;
    g.nx = 32;
    g.my = 5;
    g.dt = 1e-3;
    return g;
}

WaveguideField random_field(const GridSpec& g, std::uint64_t seed, double band = 4.0) {
    Rng rng(seed);
    return random_band_limited(g, rng, band);
}

}  // namespace

TEST_CASE("grid validation") {
    GridSpec g = small_grid();
    CHECK_NOTHROW(g.validate());
    GridSpec bad = g;
    bad.nx = 48;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = g;
    bad.my = 4;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = g;
    bad.dt = 0.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("transform round trip is the identity") {
    GridSpec g = small_grid();
    WaveguideField f = random_field(g, 7);
    WaveguideField p = to_physical(f);
    WaveguideField back = to_spectral(p);
    double rel = l2_distance(back, f) / l2_norm(f);
    CHECK(rel <= 1e-12);
}

TEST_CASE("zero field stays zero, wrong-representation input throws") {
    GridSpec g = small_grid();
    WaveguideField z(g, Repr::physical);
    WaveguideField zs = to_spectral(z);
    CHECK(l2_norm(zs) == 0.0);
    CHECK_THROWS_AS(to_spectral(zs), std::invalid_argument);
    CHECK_THROWS_AS(to_physical(z), std::invalid_argument);
}

TEST_CASE("plane wave lands on a single coefficient") {
    GridSpec g = small_grid();
    WaveguideField f = to_spectral(plane_wave(g, 0, 0, 1, 0));
    // coefficient 1 at (xi = 0, k = (1,0)), everything else at rounding
    CHECK(std::abs(f.at(0, 0, 1, 0) - cplx(1, 0)) <= 1e-12);
    f.at(0, 0, 1, 0) = 0;
    CHECK(l2_norm(f) <= 1e-12 * std::sqrt(g.volume()));
}

TEST_CASE("Plancherel identity on random fields") {
    GridSpec g = small_grid();
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        WaveguideField f = random_field(g, seed);
        double spec = l2_norm(f);
        double phys = l2_norm(to_physical(f));
        CHECK(std::abs(spec - phys) / spec <= 1e-12);
    }
}

TEST_CASE("mass of a constant field is |c|^2 times the volume") {
    GridSpec g = small_grid();
    cplx c{0.3, -1.2};
    WaveguideField f = field_from_function(g, [c](double, double, double, double) { return c; });
    double mass = norm(f, NormKind::mass).value;
    CHECK(mass == doctest::Approx(std::norm(c) * g.volume()).epsilon(1e-12));
}

TEST_CASE("H^{0,1} of a y-independent field equals its L2 norm") {
    GridSpec g = small_grid();
    WaveguideField f = field_from_function(g, [](double x1, double x2, double, double) {
        return cplx(std::exp(-(x1 * x1 + x2 * x2) / 4.0), 0.1 * x1 * std::exp(-x2 * x2));
    });
    double h01 = norm(f, NormKind::h01).value;
    CHECK(h01 == doctest::Approx(l2_norm(f)).epsilon(1e-12));
}

TEST_CASE("norms are absolutely homogeneous") {
    GridSpec g = small_grid();
    WaveguideField f = random_field(g, 11);
    cplx lam{-1.7, 0.4};
    WaveguideField lf = lam * f;
    for (NormKind kind : {NormKind::h1, NormKind::h01, NormKind::l4}) {
        double a = norm(f, kind).value;
        double b = norm(lf, kind).value;
        CHECK(b == doctest::Approx(std::abs(lam) * a).epsilon(1e-12));
    }
    double s = norm(f, NormKind::hs1s2, 1.5, 0.5).value;
    double sl = norm(lf, NormKind::hs1s2, 1.5, 0.5).value;
    CHECK(sl == doctest::Approx(std::abs(lam) * s).epsilon(1e-12));
    CHECK(norm(lf, NormKind::mass).value ==
          doctest::Approx(std::norm(lam) * norm(f, NormKind::mass).value).epsilon(1e-12));
}

TEST_CASE("norms satisfy the triangle inequality on random pairs") {
    GridSpec g = small_grid();
    for (std::uint64_t seed : {21u, 22u, 23u}) {
        WaveguideField a = random_field(g, seed);
        WaveguideField b = random_field(g, seed + 100);
        WaveguideField sum = a + b;
        for (NormKind kind : {NormKind::h1, NormKind::h01, NormKind::l4}) {
            double lhs = norm(sum, kind).value;
            double rhs = norm(a, kind).value + norm(b, kind).value;
            CHECK(lhs <= rhs * (1.0 + 1e-10));
        }
    }
}

TEST_CASE("Littlewood-Paley shells localize plane waves") {
    GridSpec g = small_grid();
    // |(xi,k)| = 1 from the pure torus mode k = (1,0)
    WaveguideField f = to_spectral(plane_wave(g, 0, 0, 1, 0));
    CHECK(l2_distance(lp_project(f, 1), f) <= 1e-12 * l2_norm(f));
    CHECK(l2_norm(lp_project(f, 4)) <= 1e-12 * l2_norm(f));
    CHECK_THROWS_AS(lp_project(f, 3), std::invalid_argument);
}

TEST_CASE("shells sum to the identity on the resolved band") {
    GridSpec g = small_grid();
    WaveguideField f = random_field(g, 31, 5.0);
    WaveguideField sum(g, Repr::spectral);
    for (int n = 1; n <= lp_max_level(g); n *= 2) sum = sum + lp_project(f, n);
    CHECK(l2_distance(sum, f) / l2_norm(f) <= 1e-10);
}

TEST_CASE("P_N is idempotent where adjacent shells vanish") {
    GridSpec g = small_grid();
    // |(xi,k)| = 2: plateau of the level-2 shell
    WaveguideField f = to_spectral(plane_wave(g, 0, 0, 2, 0));
    WaveguideField once = lp_project(f, 2);
    WaveguideField twice = lp_project(once, 2);
    CHECK(l2_distance(once, twice) <= 1e-12 * l2_norm(f));
}

TEST_CASE("z-norm estimate of a single-shell stationary trajectory") {
    GridSpec g = small_grid();
    WaveguideField f = plane_wave(g, 0, 0, 2, 0);  // shell N = 2 exactly
    std::vector<WaveguideField> traj{f, f, f, f, f};
    double dt_sample = 0.25;
    double T = 1.0;
    double expected = std::sqrt(2.0) * std::pow(T, 0.25) * l4_norm(f);
    CHECK(z_norm_estimate(traj, dt_sample) == doctest::Approx(expected).epsilon(1e-10));

    std::vector<WaveguideField> zeros{WaveguideField(g, Repr::physical),
                                      WaveguideField(g, Repr::physical)};
    CHECK(z_norm_estimate(zeros, 0.5) == 0.0);
    CHECK_THROWS_AS(z_norm_estimate(std::span<const WaveguideField>{}, 0.5),
                    std::invalid_argument);

    std::vector<WaveguideField> doubled;
    for (const auto& u : traj) doubled.push_back(cplx(2, 0) * u);
    CHECK(z_norm_estimate(doubled, dt_sample) ==
          doctest::Approx(2.0 * z_norm_estimate(traj, dt_sample)).epsilon(1e-12));
}

TEST_CASE("torus-mode slicing is an isometry onto h1L2") {
    GridSpec g = small_grid();
    WaveguideField f = random_field(g, 41);
    ResonantState v = resonant_from_waveguide(f, 2);
    double h01 = norm(f, NormKind::h01).value;
    double h1l2 = resonant_norm(v, ResonantNormKind::h1L2);
    CHECK(std::abs(h01 - h1l2) / h01 <= 1e-10);

    // full-truncation synthesis inverts the slicing
    WaveguideField back = waveguide_from_resonant(v, g);
    CHECK(l2_distance(back, to_physical(f)) / l2_norm(f) <= 1e-12);
}

TEST_CASE("E_ls worked examples") {
    double L = 16.0;
    int nx = 32;
    ResonantState v(1, L, nx);
    for (int i = 0; i < nx * nx; ++i) v.component({0, 0})[i] = cplx(0.7, 0.1);
    double m0 = component_l2(v, {0, 0});
    CHECK(resonant_norm(v, ResonantNormKind::E_ls) == doctest::Approx(m0 * m0).epsilon(1e-12));

    ResonantState w(1, L, nx);
    for (int i = 0; i < nx * nx; ++i) w.component({1, 0})[i] = cplx(0.2, -0.4);
    double c = component_l2(w, {1, 0});
    w = cplx(1.0 / c, 0) * w;  // unit L2 component
    CHECK(resonant_norm(w, ResonantNormKind::E_ls) == doctest::Approx(2.0).epsilon(1e-10));

    // h1L2 squared is E_ls under the default convention
    double h = resonant_norm(w, ResonantNormKind::h1L2);
    CHECK(h * h == doctest::Approx(resonant_norm(w, ResonantNormKind::E_ls)).epsilon(1e-12));
    // conjectural variant carries the 1/2
    CHECK(resonant_norm(w, ResonantNormKind::E_ls, 1.0, 0.0, true) ==
          doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("w-norm estimate basics") {
    double L = 16.0;
    int nx = 32;
    ResonantState v(1, L, nx);
    double w = 3.0;
    for (int i1 = 0; i1 < nx; ++i1)
        for (int i2 = 0; i2 < nx; ++i2) {
            double x1 = v.x_coord(i1), x2 = v.x_coord(i2);
            v.component({0, 0})[std::size_t(i1) * nx + i2] =
                std::exp(-(x1 * x1 + x2 * x2) / (w * w));
        }
    std::vector<ResonantState> traj{v, v, v};
    double dt_sample = 0.5;
    double T = 1.0;
    double expected = std::pow(T, 0.25) * component_l4(v, {0, 0});
    CHECK(w_norm_estimate(traj, dt_sample) == doctest::Approx(expected).epsilon(1e-10));

    std::vector<ResonantState> doubled{cplx(2, 0) * v, cplx(2, 0) * v, cplx(2, 0) * v};
    CHECK(w_norm_estimate(doubled, dt_sample) == doctest::Approx(2.0 * expected).epsilon(1e-10));

    std::vector<ResonantState> zeros{ResonantState(1, L, nx), ResonantState(1, L, nx)};
    CHECK(w_norm_estimate(zeros, dt_sample) == 0.0);
}

TEST_CASE("binary container round trip") {
    GridSpec g = small_grid();
    WaveguideField f = to_physical(random_field(g, 55));
    auto path = std::filesystem::temp_directory_path() / "wglab_field_test.bin";
    save_field(f, path.string());
    WaveguideField loaded = load_field(path.string());
    CHECK(loaded.spec() == f.spec());
    CHECK(loaded.repr() == f.repr());
    CHECK(loaded.data() == f.data());
    std::filesystem::remove(path);
}

TEST_CASE("finite detects injected NaN") {
    GridSpec g = small_grid();
    WaveguideField f(g, Repr::physical);
    CHECK(f.finite());
    f.at(1, 2, 3, 4) = cplx(std::nan(""), 0.0);
    CHECK_FALSE(f.finite());
}
