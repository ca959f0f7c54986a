#pragma once

#include <cmath>
#include <cstdint>

namespace hada {

/// SplitMix64 step; used for seeding and stream derivation.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

/**
 * Deterministic random stream (xoshiro256**).
 *
 * Hand-rolled so that results are bit-identical across platforms and
 * standard library versions; std::*_distribution would not be. Streams are
 * split per task from a root seed via substream() and never shared between
 * tasks, which keeps every Monte Carlo estimate reproducible for a fixed
 * seed and chunk layout.
 */
class RngStream {
public:
    explicit RngStream(std::uint64_t seed, std::uint64_t stream = 0) {
        std::uint64_t sm = seed ^ (0x632be59bd9b4e019ull * (stream + 1));
        for (auto& w : s_) w = splitmix64(sm);
        has_spare_ = false;
        spare_ = 0.0;
    }

    /// Derived stream, decorrelated from this one; does not advance *this.
    RngStream substream(std::uint64_t index) const {
        std::uint64_t sm = s_[0] ^ (s_[2] + 0x9e3779b97f4a7c15ull * (index + 1));
        return RngStream(splitmix64(sm), index);
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// Uniform double in [0, 1), 53-bit resolution.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * uniform01(); }

    /// Standard normal via Box-Muller (cached pair).
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1 = uniform01();
        while (u1 <= 0.0) u1 = uniform01();
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(theta);
        has_spare_ = true;
        return r * std::cos(theta);
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::uint64_t s_[4];
    bool has_spare_;
    double spare_;
};

} // namespace hada
