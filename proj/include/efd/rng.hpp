#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace efd {

/// Deterministic, platform-independent Gaussian stream: mt19937 feeding
/// Box-Muller (cosine branch first) through 53-bit uniforms assembled from
/// two raw draws. std::normal_distribution is implementation-defined, so the
/// transform is spelled out here to keep seeded runs byte-identical anywhere.
class GaussianRng {
public:
    explicit GaussianRng(std::uint32_t seed) : engine_(seed) {}

    /// Uniform on (0,1) with 53-bit resolution.
    double uniform() {
        const auto hi = static_cast<double>(engine_() >> 5);   // 27 bits
        const auto lo = static_cast<double>(engine_() >> 6);   // 26 bits
        double u = (hi * 67108864.0 + lo) / 9007199254740992.0;
        if (u <= 0.0) u = 5e-324;
        return u;
    }

    double normal() {
        if (have_cached_) {
            have_cached_ = false;
            return cached_;
        }
        const double u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * M_PI * u2;
        cached_ = r * std::sin(a);
        have_cached_ = true;
        return r * std::cos(a);
    }

private:
    std::mt19937 engine_;
    double cached_ = 0.0;
    bool have_cached_ = false;
};

}  // namespace efd
