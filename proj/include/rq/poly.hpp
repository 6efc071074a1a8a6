#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "rq/errors.hpp"
#include "rq/fq.hpp"
#include "rq/scalar.hpp"

namespace rq {

template <int N>
using Exp = std::array<int, N>;

template <int N>
int exp_degree(const Exp<N>& e) {
    int d = 0;
    for (int v : e) d += v;
    return d;
}

// Graded reverse lexicographic order, variable 0 largest. Used as a map
// comparator so that iteration starts at the leading term.
template <int N>
struct GrevlexGreater {
    bool operator()(const Exp<N>& a, const Exp<N>& b) const {
        int da = exp_degree<N>(a), db = exp_degree<N>(b);
        if (da != db) return da > db;
        for (int i = N - 1; i >= 0; --i)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    }
};

inline bool coeff_sqrt(const ScalarK& a, ScalarK& r) {
    if (!is_square(a)) return false;
    r = sqrt_element(a);
    return true;
}
inline bool coeff_sqrt(const Fq& a, Fq& r) {
    r = Fq(a.f, a.f->sqrt(a.v));
    return true;
}

// Sparse polynomial in N variables with coefficients in R (ScalarK or Fq).
template <class R, int N>
class Poly {
public:
    using E = Exp<N>;
    using Terms = std::map<E, R, GrevlexGreater<N>>;

    Poly() = default;
    explicit Poly(Field f) : f_(f) {}

    static Poly constant(const R& c) {
        Poly p(c.field());
        if (!c.is_zero()) p.t_[E{}] = c;
        return p;
    }
    static Poly constant(Field f, uint64_t a) { return constant(R(f, a)); }
    static Poly monomial(const R& c, const E& e) {
        Poly p(c.field());
        if (!c.is_zero()) p.t_[e] = c;
        return p;
    }
    static Poly var(Field f, int i, int power = 1) {
        E e{};
        e[i] = power;
        return monomial(R(f, 1), e);
    }

    Field field() const { return f_; }
    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    size_t size() const { return t_.size(); }
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && exp_degree<N>(t_.begin()->first) == 0); }
    R constant_term() const { return coefficient(E{}); }
    R coefficient(const E& e) const {
        auto it = t_.find(e);
        return it == t_.end() ? R(f_, 0) : it->second;
    }
    const E& lead_exp() const { return t_.begin()->first; }
    const R& lead_coeff() const { return t_.begin()->second; }

    int total_degree() const {
        int d = -1;
        for (auto& [e, c] : t_) d = std::max(d, exp_degree<N>(e));
        return d;
    }
    // Order of vanishing at the origin; -1 for the zero polynomial.
    int order() const {
        if (t_.empty()) return -1;
        int d = exp_degree<N>(t_.begin()->first);
        for (auto& [e, c] : t_) d = std::min(d, exp_degree<N>(e));
        return d;
    }
    int degree_in(int i) const {
        int d = -1;
        for (auto& [e, c] : t_) d = std::max(d, e[i]);
        return d;
    }
    int min_degree_in(int i) const {
        int d = -1;
        for (auto& [e, c] : t_) d = d < 0 ? e[i] : std::min(d, e[i]);
        return d;
    }
    bool is_homogeneous() const {
        if (t_.empty()) return true;
        int d = exp_degree<N>(t_.begin()->first);
        for (auto& [e, c] : t_)
            if (exp_degree<N>(e) != d) return false;
        return true;
    }
    // Homogeneous component of total degree d.
    Poly homogeneous_part(int d) const {
        Poly r(f_);
        for (auto& [e, c] : t_)
            if (exp_degree<N>(e) == d) r.t_[e] = c;
        return r;
    }

    void add_term(const E& e, const R& c) {
        if (c.is_zero()) return;
        auto it = t_.find(e);
        if (it == t_.end()) {
            t_.emplace(e, c);
            return;
        }
        it->second = it->second + c;
        if (it->second.is_zero()) t_.erase(it);
    }

    Poly operator+(const Poly& o) const {
        Poly r = *this;
        if (!r.f_) r.f_ = o.f_;
        for (auto& [e, c] : o.t_) r.add_term(e, c);
        return r;
    }
    Poly operator-(const Poly& o) const { return *this + o; }
    Poly operator-() const { return *this; }
    Poly operator*(const Poly& o) const {
        Poly r(f_ ? f_ : o.f_);
        for (auto& [e1, c1] : t_)
            for (auto& [e2, c2] : o.t_) {
                E e;
                for (int i = 0; i < N; ++i) e[i] = e1[i] + e2[i];
                r.add_term(e, c1 * c2);
            }
        return r;
    }
    Poly& operator+=(const Poly& o) {
        if (!f_) f_ = o.f_;
        for (auto& [e, c] : o.t_) add_term(e, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) { return *this += o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly scale(const R& a) const {
        Poly r(f_);
        if (a.is_zero()) return r;
        for (auto& [e, c] : t_) r.t_.emplace(e, c * a);
        return r;
    }
    Poly operator*(const R& a) const { return scale(a); }
    Poly shift(const E& s) const {
        Poly r(f_);
        for (auto& [e, c] : t_) {
            E e2;
            for (int i = 0; i < N; ++i) e2[i] = e[i] + s[i];
            r.t_.emplace(e2, c);
        }
        return r;
    }
    Poly pow(unsigned k) const {
        Poly r = constant(R(f_, 1)), b = *this;
        while (k) {
            if (k & 1) r *= b;
            k >>= 1;
            if (k) b *= b;
        }
        return r;
    }
    bool operator==(const Poly& o) const {
        if (t_.size() != o.t_.size()) return false;
        auto it = o.t_.begin();
        for (auto& [e, c] : t_) {
            if (e != it->first || c != it->second) return false;
            ++it;
        }
        return true;
    }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // Formal partial derivative; in characteristic two only odd exponents survive.
    Poly derivative(int i) const {
        Poly r(f_);
        for (auto& [e, c] : t_) {
            if (e[i] % 2 == 0) continue;
            E e2 = e;
            e2[i] -= 1;
            r.t_.emplace(e2, c);
        }
        return r;
    }

    R eval(const std::array<R, N>& p) const {
        R acc(f_, 0);
        for (auto& [e, c] : t_) {
            R term = c;
            for (int i = 0; i < N; ++i)
                if (e[i]) term = term * p[i].pow(e[i]);
            acc = acc + term;
        }
        return acc;
    }

    // Substitutes polynomial values for the variables.
    template <int M>
    Poly<R, M> substitute(const std::array<Poly<R, M>, N>& s) const {
        Poly<R, M> r(f_);
        std::array<std::map<int, Poly<R, M>>, N> cache;
        auto power = [&](int i, int k) -> const Poly<R, M>& {
            auto it = cache[i].find(k);
            if (it != cache[i].end()) return it->second;
            return cache[i].emplace(k, s[i].pow(k)).first->second;
        };
        for (auto& [e, c] : t_) {
            Poly<R, M> term = Poly<R, M>::constant(c);
            for (int i = 0; i < N; ++i)
                if (e[i]) term = term * power(i, e[i]);
            r += term;
        }
        return r;
    }

    template <class F>
    auto map_coeffs(Field f2, F&& fn) const {
        using R2 = decltype(fn(std::declval<R>()));
        Poly<R2, N> r(f2);
        for (auto& [e, c] : t_) r.add_term(e, fn(c));
        return r;
    }

    // Exact division under grevlex; empty if d does not divide *this.
    std::optional<Poly> divide(const Poly& d) const {
        if (d.is_zero()) throw ZeroDivisor("division by the zero form");
        Poly p = *this, q(f_ ? f_ : d.f_);
        const E& ld = d.lead_exp();
        R lc_inv = R(d.f_, 1) / d.lead_coeff();
        while (!p.is_zero()) {
            const E& lp = p.lead_exp();
            E s;
            for (int i = 0; i < N; ++i) {
                s[i] = lp[i] - ld[i];
                if (s[i] < 0) return std::nullopt;  // leading term survives in the remainder
            }
            R k = p.lead_coeff() * lc_inv;
            Poly t = monomial(k, s);
            q += t;
            p -= d.shift(s).scale(k);
        }
        return q;
    }

    // g with g^2 = *this when every exponent is even and every coefficient
    // is a square (termwise in characteristic two).
    std::optional<Poly> sqrt() const {
        Poly r(f_);
        for (auto& [e, c] : t_) {
            E h;
            for (int i = 0; i < N; ++i) {
                if (e[i] % 2) return std::nullopt;
                h[i] = e[i] / 2;
            }
            R s;
            if (!coeff_sqrt(c, s)) return std::nullopt;
            r.t_.emplace(h, s);
        }
        return r;
    }

private:
    Field f_ = nullptr;
    Terms t_;
};

using TriForm = Poly<ScalarK, 3>;
using FormFq = Poly<Fq, 3>;

enum Var { X = 0, Y = 1, Z = 2 };

TriForm partial_derivative(const TriForm& f, Var v);
std::optional<TriForm> form_square_root(const TriForm& f);
std::optional<TriForm> divide_form(const TriForm& f, const TriForm& d);
ScalarK eval_scalar(const TriForm& f, const std::array<ScalarK, 3>& p);
uint64_t eval_form(const FormFq& f, const std::array<uint64_t, 3>& p);

// Converts a form with constant (t-free) coefficients to a form over GF(2^m).
std::optional<FormFq> to_fq(const TriForm& f);
TriForm from_fq(const FormFq& f);
FormFq embed_form(const FormFq& f, const Embedding& e);

}  // namespace rq
