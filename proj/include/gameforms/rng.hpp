#pragma once

#include <cstdint>

#include "gameforms/rational.hpp"

namespace gf {

// Counter-based PRNG (splitmix64 over seed + counter). State is explicit and
// copyable; identical (seed, counter) always yields the identical stream on
// every platform, which the deterministic-output contract depends on.
class Rng {
  public:
    explicit Rng(uint64_t seed, uint64_t counter = 0) : seed_(seed), counter_(counter) {}

    uint64_t next() {
        uint64_t z = seed_ + (++counter_) * 0x9E3779B97F4A7C15ull;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n). n must be positive.
    uint64_t below(uint64_t n) {
        return static_cast<uint64_t>((static_cast<__uint128_t>(next()) * n) >> 64);
    }

    // Uniform integer in [lo, hi] inclusive.
    int64_t range(int64_t lo, int64_t hi) {
        return lo + static_cast<int64_t>(below(static_cast<uint64_t>(hi - lo + 1)));
    }

    bool coin() { return (next() & 1) != 0; }

    // Positive rational with numerator in [1, max_num] and denominator in
    // [1, max_den].
    Rat positive_rat(int64_t max_num, int64_t max_den) {
        return Rat(Int(range(1, max_num)), Int(range(1, max_den)));
    }

    // Independent substream; deterministic function of (seed, stream id).
    Rng fork(uint64_t stream) const {
        uint64_t z = seed_ ^ (0xD1B54A32D192ED03ull * (stream + 1));
        z = (z ^ (z >> 29)) * 0xFF51AFD7ED558CCDull;
        return Rng(z ^ (z >> 32));
    }

  private:
    uint64_t seed_;
    uint64_t counter_;
};

}  // namespace gf
