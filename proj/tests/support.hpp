#pragma once

#include <random>

#include "rq/poly.hpp"
#include "rq/rng.hpp"
#include "rq/scalar.hpp"

namespace rqtest {

using namespace rq;

inline ScalarK random_nonzero(std::mt19937_64& g, Field f, int max_deg) {
    ScalarK r;
    do r = random_scalar(g, f, max_deg);
    while (r.is_zero());
    return r;
}

inline ScalarK random_nonsquare(std::mt19937_64& g, Field f, int max_deg) {
    ScalarK r;
    do r = random_scalar(g, f, max_deg);
    while (is_square(r));
    return r;
}

inline TriForm random_form(std::mt19937_64& g, Field f, int deg, int terms, int coeff_deg) {
    TriForm r(f);
    std::uniform_int_distribution<int> dx(0, deg);
    for (int k = 0; k < terms; ++k) {
        int i = dx(g);
        int j = std::uniform_int_distribution<int>(0, deg - i)(g);
        r.add_term({i, j, deg - i - j}, random_scalar(g, f, coeff_deg));
    }
    return r;
}

}  // namespace rqtest
