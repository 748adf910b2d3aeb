#pragma once

#include <cstdint>

namespace floquet {

// Reproducibility contract: every random decision in a shot comes from one
// xoshiro256** stream whose state is derived from (base_seed, shot_index) as
//
//   stream_seed = mix64(base_seed + GOLDEN * (shot_index + 1))
//   state[0..3] = successive SplitMix64 outputs starting from stream_seed
//
// with mix64 the SplitMix64 output scrambler and GOLDEN = 2^64 / phi. All
// draws use fixed integer arithmetic (no std:: distributions), so identical
// (base_seed, shot) give identical results on every platform and at every
// thread count.

inline constexpr uint64_t kGolden = 0x9E3779B97F4A7C15ull;

inline constexpr uint64_t mix64(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

struct SplitMix64 {
    uint64_t state;
    explicit constexpr SplitMix64(uint64_t seed) : state(seed) {}
    constexpr uint64_t next() {
        state += kGolden;
        return mix64(state);
    }
};

class Rng {
  public:
    explicit Rng(uint64_t stream_seed) {
        SplitMix64 sm(stream_seed);
        for (auto& w : s_) w = sm.next();
    }

    static uint64_t shot_seed(uint64_t base_seed, uint64_t shot_index) {
        return mix64(base_seed + kGolden * (shot_index + 1));
    }

    static Rng for_shot(uint64_t base_seed, uint64_t shot_index) {
        return Rng(shot_seed(base_seed, shot_index));
    }

    uint64_t next() {
        const uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// Fair coin from the top bit.
    uint32_t bit() { return static_cast<uint32_t>(next() >> 63); }

    /// Uniform double in [0, 1) with 53 bits of precision.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, m) via multiply-shift.
    uint64_t below(uint64_t m) {
        return static_cast<uint64_t>(
            (static_cast<unsigned __int128>(next()) * m) >> 64);
    }

  private:
    static constexpr uint64_t rotl(uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }
    uint64_t s_[4];
};

}  // namespace floquet
