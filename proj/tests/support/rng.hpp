#pragma once

#include <cstdlib>
#include <random>
#include <string>

#include "scalar.hpp"

namespace hodgemc::testing {

// Deterministic test RNG; HODGEMC_SEED overrides the default seed.
inline std::mt19937_64 make_rng(uint64_t salt = 0) {
    uint64_t seed = 0x9e3779b97f4a7c15ULL;
    if (const char* env = std::getenv("HODGEMC_SEED")) seed = std::strtoull(env, nullptr, 10);
    return std::mt19937_64(seed ^ salt);
}

inline int rand_int(std::mt19937_64& rng, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    return d(rng);
}

inline Scalar rand_rational(std::mt19937_64& rng, int mag = 3) {
    long num = rand_int(rng, -mag, mag);
    long den = rand_int(rng, 1, mag);
    return Scalar::of(num, den);
}

inline Scalar rand_gaussian(std::mt19937_64& rng, int mag = 3) {
    Scalar s = rand_rational(rng, mag);
    Scalar t = rand_rational(rng, mag);
    return s + Scalar::imaginary_unit() * t;
}

}  // namespace hodgemc::testing
