#pragma once

#include <random>

#include "qc/golden.hpp"

namespace qc::testing {

inline std::mt19937_64 rng(std::uint64_t seed = 0x5eed5eedULL) { return std::mt19937_64(seed); }

inline long rand_long(std::mt19937_64& g, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(g);
}

inline GoldenInt rand_golden_int(std::mt19937_64& g, long bound = 1000) {
    return GoldenInt(Int(rand_long(g, -bound, bound)), Int(rand_long(g, -bound, bound)));
}

inline GoldenRat rand_golden_rat(std::mt19937_64& g, long bound = 1000) {
    Rat p(rand_long(g, -bound, bound), rand_long(g, 1, 60));
    Rat q(rand_long(g, -bound, bound), rand_long(g, 1, 60));
    p.canonicalize();
    q.canonicalize();
    return GoldenRat(p, q);
}

}  // namespace qc::testing
