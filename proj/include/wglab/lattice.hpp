#ifndef WGLAB_LATTICE_HPP
#define WGLAB_LATTICE_HPP

#include <cstdint>
#include <compare>
#include <unordered_map>
#include <vector>

// Integer combinatorics of the cubic resonance set on Z^2: a triple
// (j1,j2,j3) is resonant for output index j when
//     j1 - j2 + j3 = j   and   |j1|^2 - |j2|^2 + |j3|^2 = |j|^2.
// All membership tests are exact integer arithmetic; only the weighted
// sums accumulate in double, in a fixed lexicographic order.

namespace wglab {

struct LatticePoint {
    std::int64_t a = 0;
    std::int64_t b = 0;

    std::int64_t norm2() const { return a * a + b * b; }
    std::int64_t linf() const {
        std::int64_t x = a < 0 ? -a : a;
        std::int64_t y = b < 0 ? -b : b;
        return x > y ? x : y;
    }
    friend LatticePoint operator+(LatticePoint p, LatticePoint q) { return {p.a + q.a, p.b + q.b}; }
    friend LatticePoint operator-(LatticePoint p, LatticePoint q) { return {p.a - q.a, p.b - q.b}; }
    friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

inline std::int64_t dot(LatticePoint p, LatticePoint q) { return p.a * q.a + p.b * q.b; }

struct ResonantTriple {
    LatticePoint j1, j2, j3;
    LatticePoint j;  // output index, j = j1 - j2 + j3
    friend auto operator<=>(const ResonantTriple&, const ResonantTriple&) = default;
};

bool is_resonant(LatticePoint j1, LatticePoint j2, LatticePoint j3, LatticePoint j);

// Phase defect Phi = |j1|^2 - |j2|^2 + |j3|^2 - |q|^2 for a momentum-matched
// triple (throws if j1 - j2 + j3 != q). Zero exactly when resonant.
std::int64_t resonance_defect(LatticePoint j1, LatticePoint j2, LatticePoint j3, LatticePoint q);

// All resonant triples for output j with every index in the l-inf ball of
// radius trunc, in lexicographic (j1, j3) order. Reference enumerator:
// plain scan over (j1, j3) pairs.
std::vector<ResonantTriple> enumerate_resonant_triples(LatticePoint j, std::int64_t trunc);

// Same output set, produced by walking orthogonal offset pairs
// (a, b) = (j1 - j, j3 - j), a.b = 0; result is re-sorted into the
// canonical order. O(trunc^3) instead of O(trunc^4).
std::vector<ResonantTriple> enumerate_resonant_triples_fast(LatticePoint j, std::int64_t trunc);

// <j>^2 * sum over resonant triples of prod_k (1 + |j_k|^2)^-1, the
// truncated lattice sum whose boundedness is probed by the tests.
double weight_sum(LatticePoint j, std::int64_t trunc);

// Sum of (1 + |p|^2)^-1 over integer points p on the circle
// |2p - center2x|^2 = radius_sq_x4 with |p| >= amin. Doubled centers and
// quadrupled squared radii keep half-integer circle membership exact.
double circle_lattice_sum(LatticePoint center2x, std::int64_t radius_sq_x4, double amin);

struct PointHash {
    std::size_t operator()(const LatticePoint& p) const {
        return std::hash<std::int64_t>()(p.a * 0x9e3779b97f4a7c15LL ^ p.b);
    }
};

// Resonant triples for every output index in the l-inf ball of radius
// trunc, closed under (j1,j2,j3) <-> (j3,j2,j1) by construction.
class ResonanceTable {
public:
    ResonanceTable() = default;
    explicit ResonanceTable(std::int64_t trunc, bool fast = true);

    std::int64_t trunc() const { return trunc_; }
    const std::vector<ResonantTriple>& triples(LatticePoint j) const;

private:
    std::int64_t trunc_ = -1;
    std::unordered_map<LatticePoint, std::vector<ResonantTriple>, PointHash> map_;
    std::vector<ResonantTriple> empty_;
};

}  // namespace wglab

#endif
