#pragma once

#include <cstdint>

namespace catlab {

// Seeded deterministic generator (splitmix64).  We do not use the standard
// <random> distributions because their output is implementation-defined;
// every randomized routine in the library must be bit-reproducible from its
// seed across platforms.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform-ish value in [0, n).  Modulo bias is irrelevant here: callers
    /// need determinism and rough uniformity, not statistical quality.
    long below(long n) { return static_cast<long>(next() % static_cast<std::uint64_t>(n)); }

    /// Value in [lo, hi] inclusive.
    long range(long lo, long hi) { return lo + below(hi - lo + 1); }
};

} // namespace catlab
