#ifndef WGLAB_RNG_HPP
#define WGLAB_RNG_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

namespace wglab {

// Seeded generator with a fixed uniform/gaussian mapping so that streams
// are reproducible across standard library implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    double uniform() {  // [0, 1)
        return double(eng_() >> 11) * 0x1.0p-53;
    }

    double gaussian() {  // Box-Muller, unit variance
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform(), u2 = uniform();
        while (u1 <= 1e-300) u1 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double th = 6.283185307179586 * u2;
        spare_ = r * std::sin(th);
        have_spare_ = true;
        return r * std::cos(th);
    }

    std::complex<double> cgaussian() {
        double re = gaussian();
        return {re, gaussian()};
    }

private:
    std::mt19937_64 eng_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace wglab

#endif
