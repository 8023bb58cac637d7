#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "wglab/lattice.hpp"

using namespace wglab;

namespace {

// Test-side oracle, written independently of the library enumerators:
// walk every (j1, j2) pair and solve for j3.
std::set<ResonantTriple> oracle_triples(LatticePoint j, std::int64_t trunc) {
    std::set<ResonantTriple> out;
    for (std::int64_t a1 = -trunc; a1 <= trunc; ++a1)
        for (std::int64_t b1 = -trunc; b1 <= trunc; ++b1)
            for (std::int64_t a2 = -trunc; a2 <= trunc; ++a2)
                for (std::int64_t b2 = -trunc; b2 <= trunc; ++b2) {
                    LatticePoint j1{a1, b1}, j2{a2, b2};
                    LatticePoint j3 = j + j2 - j1;
                    if (j3.linf() > trunc) continue;
                    if (j1.norm2() - j2.norm2() + j3.norm2() != j.norm2()) continue;
                    out.insert({j1, j2, j3, j});
                }
    return out;
}

std::set<ResonantTriple> as_set(const std::vector<ResonantTriple>& v) {
    return {v.begin(), v.end()};
}

}  // namespace

TEST_CASE("is_resonant on the worked examples") {
    CHECK(is_resonant({1, 0}, {1, 0}, {0, 0}, {0, 0}));
    CHECK(is_resonant({1, 0}, {0, 0}, {0, 1}, {1, 1}));
    CHECK_FALSE(is_resonant({1, 0}, {0, 0}, {1, 0}, {2, 0}));
    // vector identity alone is not enough
    CHECK_FALSE(is_resonant({2, 0}, {1, 0}, {0, 0}, {1, 0}));
}

TEST_CASE("is_resonant handles large coordinates without overflow") {
    std::int64_t big = 1 << 20;
    CHECK(is_resonant({big, 0}, {big, 0}, {big, big}, {big, big}));
    CHECK_FALSE(is_resonant({big, 0}, {big, 1}, {big, big}, {big, big - 1}));
}

TEST_CASE("resonance_defect values and precondition") {
    CHECK(resonance_defect({1, 0}, {0, 0}, {1, 0}, {2, 0}) == -2);
    CHECK(resonance_defect({3, -2}, {3, -2}, {3, -2}, {3, -2}) == 0);
    CHECK(resonance_defect({1, 1}, {1, 0}, {0, 0}, {0, 1}) == 0);
    CHECK_THROWS_AS(resonance_defect({1, 0}, {0, 0}, {0, 0}, {2, 0}), std::invalid_argument);
}

TEST_CASE("enumerate_resonant_triples base cases") {
    auto only = enumerate_resonant_triples({0, 0}, 0);
    REQUIRE(only.size() == 1);
    CHECK(only[0].j1 == LatticePoint{0, 0});
    CHECK(only[0].j2 == LatticePoint{0, 0});
    CHECK(only[0].j3 == LatticePoint{0, 0});

    CHECK(enumerate_resonant_triples({0, 0}, 1).size() == 25);

    CHECK_THROWS_AS(enumerate_resonant_triples({0, 0}, -1), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_resonant_triples({3, 0}, 2), std::invalid_argument);
}

TEST_CASE("enumeration always contains the diagonal triple") {
    for (LatticePoint j : {LatticePoint{0, 0}, {2, -1}, {-3, 3}, {1, 2}}) {
        auto triples = enumerate_resonant_triples(j, 3);
        ResonantTriple diag{j, j, j, j};
        CHECK(std::find(triples.begin(), triples.end(), diag) != triples.end());
    }
}

TEST_CASE("brute-force enumerator agrees with the test oracle") {
    for (LatticePoint j : {LatticePoint{0, 0}, {1, 0}, {2, -2}, {-1, 2}})
        CHECK(as_set(enumerate_resonant_triples(j, 3)) == oracle_triples(j, 3));
}

TEST_CASE("fast enumerator is set-equal to brute force") {
    SUBCASE("trunc 0") {
        CHECK(enumerate_resonant_triples_fast({0, 0}, 0) == enumerate_resonant_triples({0, 0}, 0));
    }
    SUBCASE("origin, trunc 1") {
        CHECK(as_set(enumerate_resonant_triples_fast({0, 0}, 1)) ==
              as_set(enumerate_resonant_triples({0, 0}, 1)));
    }
    SUBCASE("off-origin, larger radius") {
        CHECK(as_set(enumerate_resonant_triples_fast({3, 2}, 6)) ==
              as_set(enumerate_resonant_triples({3, 2}, 6)));
    }
    SUBCASE("sorted order matches exactly") {
        for (LatticePoint j : {LatticePoint{0, 0}, {1, -1}, {2, 2}})
            CHECK(enumerate_resonant_triples_fast(j, 4) == enumerate_resonant_triples(j, 4));
    }
}

TEST_CASE("resonance set is closed under (j1,j2,j3) <-> (j3,j2,j1)") {
    for (std::int64_t a = -3; a <= 3; ++a)
        for (std::int64_t b = -3; b <= 3; ++b) {
            auto triples = enumerate_resonant_triples_fast({a, b}, 5);
            auto set = as_set(triples);
            for (const auto& t : triples) {
                ResonantTriple rev{t.j3, t.j2, t.j1, t.j};
                CHECK(set.count(rev) == 1);
            }
        }
}

TEST_CASE("weight_sum examples") {
    CHECK(weight_sum({0, 0}, 0) == doctest::Approx(1.0).epsilon(1e-14));

    // exact rational value for the 25 origin triples at trunc 1:
    // 1 + 2*(1 + 4/9) + 8/12 = 41/9
    CHECK(weight_sum({0, 0}, 1) == doctest::Approx(41.0 / 9.0).epsilon(1e-13));

    CHECK_THROWS_AS(weight_sum({3, 0}, 2), std::invalid_argument);
}

TEST_CASE("weight_sum agrees with direct summation over enumerated triples") {
    for (LatticePoint j : {LatticePoint{0, 0}, {1, 1}, {-2, 1}}) {
        double direct = 0.0;
        for (const auto& t : enumerate_resonant_triples(j, 4))
            direct += 1.0 / ((1.0 + double(t.j1.norm2())) * (1.0 + double(t.j2.norm2())) *
                             (1.0 + double(t.j3.norm2())));
        direct *= 1.0 + double(j.norm2());
        CHECK(weight_sum(j, 4) == doctest::Approx(direct).epsilon(1e-12));
    }
}

TEST_CASE("weight_sum is nondecreasing in the truncation radius") {
    for (LatticePoint j : {LatticePoint{0, 0}, {1, 0}, {2, -2}}) {
        double prev = 0.0;
        for (std::int64_t trunc = 2; trunc <= 16; trunc *= 2) {
            double w = weight_sum(j, trunc);
            CHECK(w >= prev);
            prev = w;
        }
    }
}

TEST_CASE("lemma 8.2 probe: tail increments shrink") {
    // Cauchy-type decay at small scale: increments 8->16 below 4->8.
    for (LatticePoint j : {LatticePoint{0, 0}, {2, 1}, {-3, 3}}) {
        double w4 = weight_sum(j, 4), w8 = weight_sum(j, 8), w16 = weight_sum(j, 16);
        CHECK(w16 - w8 < w8 - w4);
    }
}

TEST_CASE("circle_lattice_sum examples") {
    CHECK(circle_lattice_sum({0, 0}, 4, 1.0) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(circle_lattice_sum({0, 0}, 0, 1.0) == 0.0);
    // radius 5 circle: 12 points, all with |p|^2 = 25
    CHECK(circle_lattice_sum({0, 0}, 100, 1.0) == doctest::Approx(12.0 / 26.0).epsilon(1e-14));
    CHECK_THROWS_AS(circle_lattice_sum({0, 0}, -4, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(circle_lattice_sum({0, 0}, 4, 0.5), std::invalid_argument);
}

TEST_CASE("circle_lattice_sum with half-integer center") {
    // center (1/2, 0), radius 1/2: lattice points (0,0) and (1,0); only
    // (1,0) survives |p| >= 1, with weight 1/2.
    CHECK(circle_lattice_sum({1, 0}, 1, 1.0) == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("lemma 8.3 probe: A * sum stays within a calibrated factor") {
    // Circles through the origin with half-integer centers, the shape the
    // triple-sum bound integrates over.
    std::vector<LatticePoint> centers2x;
    for (std::int64_t a = 1; a <= 48; ++a)
        for (std::int64_t b = 0; b <= 48; b += 3) centers2x.push_back({a, b});

    auto family_max = [&](double amin) {
        double worst = 0.0;
        for (auto c : centers2x)
            worst = std::max(worst, circle_lattice_sum(c, c.norm2(), amin));
        return worst;
    };
    double calibration = family_max(1.0);
    CHECK(calibration > 0.0);
    for (double a : {2.0, 4.0, 8.0}) {
        double probe = a * family_max(a);
        CHECK(probe <= 4.0 * calibration);
    }
}

TEST_CASE("ResonanceTable stores closed symmetric triple lists") {
    ResonanceTable table(2);
    CHECK(table.trunc() == 2);
    CHECK(table.triples({0, 0}) == enumerate_resonant_triples_fast({0, 0}, 2));
    for (std::int64_t a = -2; a <= 2; ++a)
        for (std::int64_t b = -2; b <= 2; ++b) {
            auto triples = table.triples({a, b});
            auto set = as_set(triples);
            for (const auto& t : triples) {
                CHECK(is_resonant(t.j1, t.j2, t.j3, t.j));
                CHECK(set.count({t.j3, t.j2, t.j1, t.j}) == 1);
            }
        }
    CHECK(table.triples({5, 5}).empty());
}
