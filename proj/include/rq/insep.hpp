#pragma once

#include <array>
#include <string>
#include <vector>

#include "rq/poly.hpp"
#include "rq/scalar.hpp"

namespace rq {

// Element of K^(1/4) = GF(2^m)(s), s^4 = t, in the K-basis 1, s, s^2, s^3.
class InsepElem {
public:
    InsepElem() = default;
    explicit InsepElem(const ScalarK& a);
    InsepElem(Field f, std::array<ScalarK, 4> c) : f_(f), c_(std::move(c)) {}
    static InsepElem s(Field f);

    Field field() const { return f_; }
    const std::array<ScalarK, 4>& coords() const { return c_; }
    bool is_zero() const;
    bool in_K() const { return c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero(); }

    InsepElem operator+(const InsepElem& o) const;
    InsepElem operator*(const InsepElem& o) const;
    InsepElem operator*(const ScalarK& a) const;
    InsepElem pow(int e) const;
    bool operator==(const InsepElem& o) const { return c_ == o.c_; }
    bool operator!=(const InsepElem& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    Field f_ = nullptr;
    std::array<ScalarK, 4> c_;
};

InsepElem fourth_root(const ScalarK& a);
InsepElem square_root(const ScalarK& a);
InsepElem eval_insep(const TriForm& f, const std::array<InsepElem, 3>& p);
// Dimension over K of the K-algebra generated by gens inside K^(1/4).
int subalgebra_dimension(const std::vector<InsepElem>& gens);

}  // namespace rq
