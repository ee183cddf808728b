#pragma once

#include <cmath>
#include <cstdint>

namespace noma {

/// splitmix64 step; also used to mix seeds and batch indices into
/// independent generator states.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Deterministic combination of a user seed and a stream tag (batch index,
/// grid index, ...). Equal inputs give equal outputs on every platform.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t tag) {
    std::uint64_t s = seed ^ (0x9e3779b97f4a7c15ULL + (tag << 1));
    std::uint64_t a = splitmix64(s);
    return a ^ splitmix64(s);
}

/// xoshiro256++ — small, fast, fully specified generator, seeded through
/// splitmix64 so any 64-bit value gives a valid state.
class Xoshiro256pp {
public:
    explicit Xoshiro256pp(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& word : state_) word = splitmix64(sm);
    }

    /// Generator for one Monte Carlo batch: hash(seed, batch_index) seeds an
    /// independent stream, so any partition of batches over workers replays
    /// identical draws.
    static Xoshiro256pp for_batch(std::uint64_t seed, std::uint64_t batch_index) {
        return Xoshiro256pp(mix_seed(seed, batch_index));
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

    /// Uniform double in [0, 1), 53 random bits.
    double uniform01() { return double(next() >> 11) * 0x1.0p-53; }

    /// Unit-mean exponential by inverse transform.
    double exponential() { return -std::log1p(-uniform01()); }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }
    std::uint64_t state_[4];
};

}  // namespace noma
