#pragma once

#include <cstdint>
#include <string>

#include "rq/gf2m.hpp"

namespace rq {

// Element of a finite field GF(2^m) that carries its field, so it can be used
// as a polynomial coefficient alongside ScalarK.
struct Fq {
    Field f = nullptr;
    uint64_t v = 0;

    Fq() = default;
    Fq(Field field, uint64_t value) : f(field), v(value) {}

    Field field() const { return f; }
    bool is_zero() const { return v == 0; }
    bool is_one() const { return v == 1; }
    Fq operator+(const Fq& o) const { return Fq(f ? f : o.f, v ^ o.v); }
    Fq operator-(const Fq& o) const { return *this + o; }
    Fq operator-() const { return *this; }
    Fq operator*(const Fq& o) const {
        Field F = f ? f : o.f;
        return Fq(F, F->mul(v, o.v));
    }
    Fq operator/(const Fq& o) const {
        Field F = f ? f : o.f;
        return Fq(F, F->div(v, o.v));
    }
    Fq& operator+=(const Fq& o) { return *this = *this + o; }
    Fq& operator*=(const Fq& o) { return *this = *this * o; }
    Fq inv() const { return Fq(f, f->inv(v)); }
    Fq pow(uint64_t e) const { return Fq(f, f->pow(v, e)); }
    bool operator==(const Fq& o) const { return v == o.v; }
    bool operator!=(const Fq& o) const { return v != o.v; }
    std::string to_string() const { return f->to_string(v); }
};

}  // namespace rq
