#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace rebalance {

// Deterministic cross-platform RNG used by every sampler.
//
// Stream: xoshiro256** with the 256-bit state filled from a splitmix64
// stream started at the user seed. Identical seeds give identical streams
// on every platform; all randomized samplers document their draw order in
// terms of this generator.

inline std::uint64_t splitmix64_next(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// i-th output of the splitmix64 stream started at `master`, computable
// without generating predecessors. Used to derive per-subset and per-stage
// seeds in ensemble and pipeline.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t i) {
    std::uint64_t state = master + i * 0x9E3779B97F4A7C15ULL;
    return splitmix64_next(state);
}

class Xoshiro256ss {
public:
    explicit Xoshiro256ss(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& word : state_) word = splitmix64_next(sm);
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform double in [0, 1), 53 random bits.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Unbiased integer in [0, n); rejection sampling. n must be > 0.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t threshold = (0 - n) % n;
        for (;;) {
            const std::uint64_t r = next();
            if (r >= threshold) return r % n;
        }
    }

    // Standard normal via Box-Muller; consumes two uniforms per call.
    double normal() {
        double u1 = uniform01();
        while (u1 == 0.0) u1 = uniform01();
        const double u2 = uniform01();
        constexpr double two_pi = 6.283185307179586476925286766559;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::array<std::uint64_t, 4> state_;
};

}  // namespace rebalance
