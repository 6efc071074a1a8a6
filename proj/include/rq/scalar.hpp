#pragma once

#include <cstdint>
#include <string>

#include "rq/upoly.hpp"

namespace rq {

// Element of K = GF(2^m)(t): a reduced fraction with monic denominator.
class ScalarK {
public:
    ScalarK() = default;
    explicit ScalarK(Field f, uint64_t a = 0) : num_(UPoly::constant(f, a)), den_(UPoly::constant(f, 1)) {}
    ScalarK(UPoly num, UPoly den);  // normalizes; throws DivisionByZero if den = 0
    static ScalarK t(Field f) { return ScalarK(UPoly::x(f), UPoly::constant(f, 1)); }
    static ScalarK from_poly(const UPoly& p) { return ScalarK(p, UPoly::constant(p.field(), 1)); }

    Field field() const { return num_.field(); }
    const UPoly& num() const { return num_; }
    const UPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    // In GF(2^m), i.e. free of t.
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    uint64_t constant_value() const { return num_[0]; }

    ScalarK operator+(const ScalarK& o) const;
    ScalarK operator-(const ScalarK& o) const { return *this + o; }
    ScalarK operator-() const { return *this; }
    ScalarK operator*(const ScalarK& o) const;
    ScalarK operator/(const ScalarK& o) const;
    ScalarK& operator+=(const ScalarK& o) { return *this = *this + o; }
    ScalarK& operator-=(const ScalarK& o) { return *this = *this + o; }
    ScalarK& operator*=(const ScalarK& o) { return *this = *this * o; }
    ScalarK& operator/=(const ScalarK& o) { return *this = *this / o; }
    ScalarK inv() const;
    ScalarK pow(long e) const;
    bool operator==(const ScalarK& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const ScalarK& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    UPoly num_;
    UPoly den_;
};

bool is_square(const ScalarK& x);
// Throws NotASquare unless is_square(x).
ScalarK sqrt_element(const ScalarK& x);

}  // namespace rq
