#include "wglab/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace wglab {

bool is_resonant(LatticePoint j1, LatticePoint j2, LatticePoint j3, LatticePoint j) {
    if (j1 - j2 + j3 != j) return false;
    return j1.norm2() - j2.norm2() + j3.norm2() == j.norm2();
}

std::int64_t resonance_defect(LatticePoint j1, LatticePoint j2, LatticePoint j3, LatticePoint q) {
    if (j1 - j2 + j3 != q)
        throw std::invalid_argument("resonance_defect: j1 - j2 + j3 != q");
    return j1.norm2() - j2.norm2() + j3.norm2() - q.norm2();
}

std::vector<ResonantTriple> enumerate_resonant_triples(LatticePoint j, std::int64_t trunc) {
    if (trunc < 0) throw std::invalid_argument("enumerate_resonant_triples: trunc < 0");
    if (j.linf() > trunc) throw std::invalid_argument("enumerate_resonant_triples: |j|_inf > trunc");
    std::vector<ResonantTriple> out;
    for (std::int64_t a1 = -trunc; a1 <= trunc; ++a1)
        for (std::int64_t b1 = -trunc; b1 <= trunc; ++b1)
            for (std::int64_t a3 = -trunc; a3 <= trunc; ++a3)
                for (std::int64_t b3 = -trunc; b3 <= trunc; ++b3) {
                    LatticePoint j1{a1, b1}, j3{a3, b3};
                    LatticePoint j2 = j1 + j3 - j;
                    if (j2.linf() > trunc) continue;
                    if (j1.norm2() - j2.norm2() + j3.norm2() != j.norm2()) continue;
                    out.push_back({j1, j2, j3, j});
                }
    return out;
}

namespace {

// b ranges over integer multiples of the primitive vector orthogonal to a.
LatticePoint primitive_perp(LatticePoint a) {
    std::int64_t g = std::gcd(a.a < 0 ? -a.a : a.a, a.b < 0 ? -a.b : a.b);
    return {-a.b / g, a.a / g};
}

}  // namespace

std::vector<ResonantTriple> enumerate_resonant_triples_fast(LatticePoint j, std::int64_t trunc) {
    if (trunc < 0) throw std::invalid_argument("enumerate_resonant_triples_fast: trunc < 0");
    if (j.linf() > trunc) throw std::invalid_argument("enumerate_resonant_triples_fast: |j|_inf > trunc");
    std::vector<ResonantTriple> out;
    auto in_ball = [trunc](LatticePoint p) { return p.linf() <= trunc; };
    for (std::int64_t aa = -j.a - trunc; aa <= -j.a + trunc; ++aa)
        for (std::int64_t ab = -j.b - trunc; ab <= -j.b + trunc; ++ab) {
            LatticePoint a{aa, ab};
            LatticePoint j1 = j + a;
            if (a.a == 0 && a.b == 0) {
                // j1 = j: every j3 in the ball with j2 = j3 in the ball works.
                for (std::int64_t xa = -trunc; xa <= trunc; ++xa)
                    for (std::int64_t xb = -trunc; xb <= trunc; ++xb)
                        out.push_back({j, {xa, xb}, {xa, xb}, j});
                continue;
            }
            LatticePoint p = primitive_perp(a);
            // b = t*p with j + b and j + a + b inside the ball; t is bounded
            // by the ball diameter along either nonzero component of p.
            std::int64_t pl = p.linf();
            std::int64_t tmax = (2 * trunc) / pl;
            for (std::int64_t t = -tmax; t <= tmax; ++t) {
                LatticePoint b{t * p.a, t * p.b};
                LatticePoint j3 = j + b;
                LatticePoint j2 = j + a + b;
                if (!in_ball(j3) || !in_ball(j2)) continue;
                out.push_back({j1, j2, j3, j});
            }
        }
    std::sort(out.begin(), out.end(), [](const ResonantTriple& x, const ResonantTriple& y) {
        return std::tie(x.j1, x.j3) < std::tie(y.j1, y.j3);
    });
    return out;
}

double weight_sum(LatticePoint j, std::int64_t trunc) {
    if (trunc < j.linf())
        throw std::invalid_argument("weight_sum: trunc < |j|_inf");
    // Same orthogonal-pair walk as the fast enumerator, accumulated in a
    // fixed order without materializing triples.
    double sum = 0.0;
    auto weight = [](LatticePoint j1, LatticePoint j2, LatticePoint j3) {
        return 1.0 / ((1.0 + double(j1.norm2())) * (1.0 + double(j2.norm2())) *
                      (1.0 + double(j3.norm2())));
    };
    for (std::int64_t aa = -j.a - trunc; aa <= -j.a + trunc; ++aa)
        for (std::int64_t ab = -j.b - trunc; ab <= -j.b + trunc; ++ab) {
            LatticePoint a{aa, ab};
            LatticePoint j1 = j + a;
            if (a.a == 0 && a.b == 0) {
                for (std::int64_t xa = -trunc; xa <= trunc; ++xa)
                    for (std::int64_t xb = -trunc; xb <= trunc; ++xb)
                        sum += weight(j, {xa, xb}, {xa, xb});
                continue;
            }
            LatticePoint p = primitive_perp(a);
            std::int64_t tmax = (2 * trunc) / p.linf();
            for (std::int64_t t = -tmax; t <= tmax; ++t) {
                LatticePoint b{t * p.a, t * p.b};
                LatticePoint j3 = j + b;
                LatticePoint j2 = j + a + b;
                if (j3.linf() > trunc || j2.linf() > trunc) continue;
                sum += weight(j1, j2, j3);
            }
        }
    return (1.0 + double(j.norm2())) * sum;
}

double circle_lattice_sum(LatticePoint center2x, std::int64_t radius_sq_x4, double amin) {
    if (radius_sq_x4 < 0) throw std::invalid_argument("circle_lattice_sum: radius_sq_x4 < 0");
    if (amin < 1.0) throw std::invalid_argument("circle_lattice_sum: amin < 1");
    // |2p - 2P| = 2R, so p ranges over |p - P|_inf <= R.
    double radius = std::sqrt(double(radius_sq_x4)) / 2.0;
    std::int64_t r = std::int64_t(std::ceil(radius)) + 1;
    std::int64_t ca = center2x.a, cb = center2x.b;
    std::int64_t lo_a = (ca - 2 * r) / 2 - 1, hi_a = (ca + 2 * r) / 2 + 1;
    std::int64_t lo_b = (cb - 2 * r) / 2 - 1, hi_b = (cb + 2 * r) / 2 + 1;
    double amin2 = amin * amin;
    double sum = 0.0;
    for (std::int64_t pa = lo_a; pa <= hi_a; ++pa)
        for (std::int64_t pb = lo_b; pb <= hi_b; ++pb) {
            std::int64_t da = 2 * pa - ca, db = 2 * pb - cb;
            if (da * da + db * db != radius_sq_x4) continue;
            std::int64_t n2 = pa * pa + pb * pb;
            if (double(n2) < amin2) continue;
            sum += 1.0 / (1.0 + double(n2));
        }
    return sum;
}

ResonanceTable::ResonanceTable(std::int64_t trunc, bool fast) : trunc_(trunc) {
    if (trunc < 0) throw std::invalid_argument("ResonanceTable: trunc < 0");
    for (std::int64_t a = -trunc; a <= trunc; ++a)
        for (std::int64_t b = -trunc; b <= trunc; ++b) {
            LatticePoint j{a, b};
            map_[j] = fast ? enumerate_resonant_triples_fast(j, trunc)
                           : enumerate_resonant_triples(j, trunc);
        }
}

const std::vector<ResonantTriple>& ResonanceTable::triples(LatticePoint j) const {
    auto it = map_.find(j);
    return it == map_.end() ? empty_ : it->second;
}

}  // namespace wglab
