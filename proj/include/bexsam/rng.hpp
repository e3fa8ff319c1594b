#pragma once

#include <cstdint>
#include <random>

namespace bexsam {

// All randomness in the project flows through mt19937_64 seeded via
// splitmix64 mixing, so results are bit-identical across platforms.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Derives an independent sub-seed from a base seed and up to three stream
// indices (benchmark cell coordinates, trial numbers, ...).
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a = 0,
                                 std::uint64_t b = 0, std::uint64_t c = 0) {
    std::uint64_t s = splitmix64(base);
    s = splitmix64(s ^ a);
    s = splitmix64(s ^ b);
    s = splitmix64(s ^ c);
    return s;
}

// Uniform double in [0,1) with 53 random bits. Avoids std::uniform_real_distribution,
// whose output is not specified identically across standard libraries.
inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform double strictly inside (lo, hi).
inline double uniform_open(std::mt19937_64& rng, double lo, double hi) {
    double u;
    do {
        u = uniform01(rng);
    } while (u == 0.0);
    return lo + u * (hi - lo);
}

inline bool bernoulli(std::mt19937_64& rng, double p) {
    return uniform01(rng) < p;
}

// Uniform integer in [0, n) by rejection.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % n;
}

}  // namespace bexsam
