#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "rq/scalar.hpp"

namespace rq {

// Independent stream derived from a run seed and a stream name, so that
// adding a consumer never shifts the numbers another one sees.
inline std::mt19937_64 make_rng(uint64_t seed, std::string_view stream) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : stream) h = (h ^ ch) * 1099511628211ull;
    uint64_t z = seed + 0x9e3779b97f4a7c15ull * (h | 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return std::mt19937_64(z ^ (z >> 31));
}

inline UPoly random_upoly(std::mt19937_64& g, Field f, int max_deg) {
    int d = std::uniform_int_distribution<int>(0, max_deg)(g);
    std::vector<uint64_t> c(d + 1);
    for (auto& x : c) x = g() & f->mask();
    return UPoly(f, c);
}

// Numerator and denominator of degree <= max_deg, coefficients uniform.
inline ScalarK random_scalar(std::mt19937_64& g, Field f, int max_deg) {
    UPoly den;
    do den = random_upoly(g, f, max_deg);
    while (den.is_zero());
    return ScalarK(random_upoly(g, f, max_deg), den);
}

}  // namespace rq
