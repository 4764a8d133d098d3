#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace radr {

// Deterministic random stream. mt19937_64 output is pinned by the standard;
// the double conversions are done by hand because the std:: distributions are
// implementation-defined and every run must be bit-reproducible.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    // uniform in [0, 1)
    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // uniform integer in [0, n); n must be > 0
    std::uint64_t uniform_int(std::uint64_t n) { return eng_() % n; }

    // standard normal, Box-Muller; consumes exactly two uniforms per call
    double normal() {
        constexpr double two_pi = 6.283185307179586476925286766559;
        double u1 = uniform();
        double u2 = uniform();
        if (u1 <= 0.0) u1 = 0x1.0p-53;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace radr
