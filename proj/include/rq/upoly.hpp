#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rq/gf2m.hpp"

namespace rq {

// Univariate polynomial over a GF(2^m). c[i] is the coefficient of X^i;
// leading zeros are always stripped, the zero polynomial has no coefficients.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(Field f) : f_(f) {}
    UPoly(Field f, std::vector<uint64_t> c);
    static UPoly constant(Field f, uint64_t a);
    static UPoly monomial(Field f, uint64_t a, int deg);
    static UPoly x(Field f) { return monomial(f, 1, 1); }

    Field field() const { return f_; }
    const std::vector<uint64_t>& coeffs() const { return c_; }
    int degree() const { return int(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    bool is_constant() const { return c_.size() <= 1; }
    uint64_t lead() const { return c_.empty() ? 0 : c_.back(); }
    uint64_t operator[](int i) const { return i < int(c_.size()) ? c_[i] : 0; }

    UPoly operator+(const UPoly& o) const;
    UPoly operator-(const UPoly& o) const { return *this + o; }
    UPoly operator*(const UPoly& o) const;
    UPoly& operator+=(const UPoly& o) { return *this = *this + o; }
    UPoly& operator*=(const UPoly& o) { return *this = *this * o; }
    UPoly scale(uint64_t a) const;
    UPoly shift(int k) const;  // multiply by X^k
    bool operator==(const UPoly& o) const { return c_ == o.c_; }
    bool operator!=(const UPoly& o) const { return c_ != o.c_; }

    std::pair<UPoly, UPoly> divmod(const UPoly& d) const;
    UPoly operator/(const UPoly& d) const { return divmod(d).first; }
    UPoly operator%(const UPoly& d) const { return divmod(d).second; }
    UPoly monic() const;
    UPoly derivative() const;
    UPoly pow(uint64_t e) const;
    UPoly powmod(uint64_t e, const UPoly& m) const;
    uint64_t eval(uint64_t a) const;
    UPoly embed(const Embedding& e) const;

    // Frobenius root: the unique r with r(X)^2 = *this, if every odd
    // coefficient vanishes. Returns false otherwise.
    bool sqrt(UPoly& r) const;
    bool even_support() const;

    std::string to_string(char var = 't') const;

private:
    void trim();
    Field f_ = nullptr;
    std::vector<uint64_t> c_;
};

UPoly gcd(UPoly a, UPoly b);

// Squarefree decomposition: pairs (g_i, i) with *this = lc * prod g_i^i,
// each g_i squarefree, monic and pairwise coprime.
std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& f);
// Degree of the squarefree part, i.e. the number of distinct roots in the
// algebraic closure.
int distinct_root_count(const UPoly& f);
// Distinct roots lying in the coefficient field, ascending.
std::vector<uint64_t> roots_in_field(const UPoly& f);
// Smallest r such that f splits into linear factors over GF(2^(m r)).
int splitting_degree(const UPoly& f);
// Irreducible over its coefficient field (Rabin test).
bool is_irreducible(const UPoly& f);

}  // namespace rq
