#include "rq/scalar.hpp"

#include "rq/errors.hpp"

namespace rq {

ScalarK::ScalarK(UPoly num, UPoly den) {
    if (den.is_zero()) throw DivisionByZero("zero denominator");
    Field f = den.field();
    if (num.is_zero()) {
        num_ = UPoly(f);
        den_ = UPoly::constant(f, 1);
        return;
    }
    UPoly g = gcd(num, den);
    if (!g.is_one()) {
        num = num / g;
        den = den / g;
    }
    uint64_t li = f->inv(den.lead());
    num_ = num.scale(li);
    den_ = den.scale(li);
}

ScalarK ScalarK::operator+(const ScalarK& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (den_ == o.den_) return ScalarK(num_ + o.num_, den_);
    return ScalarK(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

ScalarK ScalarK::operator*(const ScalarK& o) const {
    if (is_zero() || o.is_zero()) return ScalarK(field() ? field() : o.field());
    // cross-cancel first to keep degrees small
    UPoly g1 = gcd(num_, o.den_), g2 = gcd(o.num_, den_);
    return ScalarK((num_ / g1) * (o.num_ / g2), (den_ / g2) * (o.den_ / g1));
}

ScalarK ScalarK::inv() const {
    if (is_zero()) throw DivisionByZero("inverse of zero in K");
    return ScalarK(den_, num_);
}

ScalarK ScalarK::operator/(const ScalarK& o) const { return *this * o.inv(); }

ScalarK ScalarK::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    return ScalarK(num_.pow(uint64_t(e)), den_.pow(uint64_t(e)));
}

std::string ScalarK::to_string() const {
    if (den_.is_one()) return num_.to_string('t');
    return "(" + num_.to_string('t') + ")/(" + den_.to_string('t') + ")";
}

bool is_square(const ScalarK& x) { return x.num().even_support() && x.den().even_support(); }

ScalarK sqrt_element(const ScalarK& x) {
    UPoly n, d;
    if (!x.num().sqrt(n) || !x.den().sqrt(d)) throw NotASquare(x.to_string() + " is not a square in K");
    return ScalarK(n, d);
}

}  // namespace rq
