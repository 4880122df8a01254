#pragma once

#include <cstdint>

namespace idealflow {

// Deterministic, platform-independent PRNG. std::shuffle and the standard
// distributions are implementation-defined, so everything seeded here is
// hand-rolled: splitmix64 for stream derivation, xoshiro256++ for draws.
// Streams are split by hashing (seed, stream index), which makes per-agent
// simulation order-independent.

inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

class Xoshiro256pp {
public:
    explicit Xoshiro256pp(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& word : state_) word = splitmix64(sm);
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform in [0, 1), 53-bit resolution.
    double uniform01() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    // Uniform in [0, bound) by rejection; unbiased.
    std::uint64_t bounded(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t state_[4]{};
};

// Independent stream for (seed, index); used per agent and per sweep case.
inline Xoshiro256pp split_stream(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t sm = seed;
    const std::uint64_t a = splitmix64(sm);
    sm = index ^ 0xd1b54a32d192ed03ULL;
    const std::uint64_t b = splitmix64(sm);
    return Xoshiro256pp(a ^ (b + 0x2545f4914f6cdd1dULL));
}

}  // namespace idealflow
