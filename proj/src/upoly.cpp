#include "rq/upoly.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "rq/errors.hpp"

namespace rq {

UPoly::UPoly(Field f, std::vector<uint64_t> c) : f_(f), c_(std::move(c)) { trim(); }

UPoly UPoly::constant(Field f, uint64_t a) { return UPoly(f, {a}); }

UPoly UPoly::monomial(Field f, uint64_t a, int deg) {
    std::vector<uint64_t> c(deg + 1, 0);
    c[deg] = a;
    return UPoly(f, std::move(c));
}

void UPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UPoly UPoly::operator+(const UPoly& o) const {
    Field f = f_ ? f_ : o.f_;
    std::vector<uint64_t> r(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] ^= o.c_[i];
    return UPoly(f, std::move(r));
}

UPoly UPoly::operator*(const UPoly& o) const {
    Field f = f_ ? f_ : o.f_;
    if (c_.empty() || o.c_.empty()) return UPoly(f);
    std::vector<uint64_t> r(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (!c_[i]) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] ^= f->mul(c_[i], o.c_[j]);
    }
    return UPoly(f, std::move(r));
}

UPoly UPoly::scale(uint64_t a) const {
    std::vector<uint64_t> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = f_->mul(c_[i], a);
    return UPoly(f_, std::move(r));
}

UPoly UPoly::shift(int k) const {
    if (c_.empty()) return *this;
    std::vector<uint64_t> r(k, 0);
    r.insert(r.end(), c_.begin(), c_.end());
    return UPoly(f_, std::move(r));
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& d) const {
    if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
    Field f = f_ ? f_ : d.f_;
    std::vector<uint64_t> r = c_;
    int dd = d.degree();
    if (degree() < dd) return {UPoly(f), *this};
    std::vector<uint64_t> q(degree() - dd + 1, 0);
    uint64_t li = f->inv(d.lead());
    for (int i = degree(); i >= dd; --i) {
        if (!r[i]) continue;
        uint64_t k = f->mul(r[i], li);
        q[i - dd] = k;
        for (int j = 0; j <= dd; ++j) r[i - dd + j] ^= f->mul(k, d.c_[j]);
    }
    return {UPoly(f, std::move(q)), UPoly(f, std::move(r))};
}

UPoly UPoly::monic() const {
    if (is_zero()) return *this;
    return scale(f_->inv(lead()));
}

UPoly UPoly::derivative() const {
    std::vector<uint64_t> r;
    for (size_t i = 1; i < c_.size(); ++i) r.push_back((i & 1) ? c_[i] : 0);
    return UPoly(f_, std::move(r));
}

UPoly UPoly::pow(uint64_t e) const {
    UPoly r = constant(f_, 1), b = *this;
    while (e) {
        if (e & 1) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}

UPoly UPoly::powmod(uint64_t e, const UPoly& m) const {
    UPoly r = constant(f_, 1) % m, b = *this % m;
    while (e) {
        if (e & 1) r = (r * b) % m;
        e >>= 1;
        if (e) b = (b * b) % m;
    }
    return r;
}

uint64_t UPoly::eval(uint64_t a) const {
    uint64_t r = 0;
    for (int i = degree(); i >= 0; --i) r = f_->mul(r, a) ^ c_[i];
    return r;
}

UPoly UPoly::embed(const Embedding& e) const {
    std::vector<uint64_t> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = e(c_[i]);
    return UPoly(e.to(), std::move(r));
}

bool UPoly::even_support() const {
    for (size_t i = 1; i < c_.size(); i += 2)
        if (c_[i]) return false;
    return true;
}

bool UPoly::sqrt(UPoly& r) const {
    if (!even_support()) return false;
    std::vector<uint64_t> s((c_.size() + 1) / 2);
    for (size_t i = 0; i < c_.size(); i += 2) s[i / 2] = f_->sqrt(c_[i]);
    r = UPoly(f_, std::move(s));
    return true;
}

std::string UPoly::to_string(char var) const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
        if (!c_[i]) continue;
        std::string cs = f_->to_string(c_[i]);
        bool compound = cs.find('+') != std::string::npos;
        std::string mono = i == 0 ? "" : i == 1 ? std::string(1, var) : std::string(1, var) + "^" + std::to_string(i);
        std::string term;
        if (mono.empty())
            term = compound ? "(" + cs + ")" : cs;
        else if (cs == "1")
            term = mono;
        else
            term = (compound ? "(" + cs + ")" : cs) + "*" + mono;
        if (!s.empty()) s += " + ";
        s += term;
    }
    return s;
}

UPoly gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
        UPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& f) {
    std::vector<std::pair<UPoly, int>> out;
    if (f.degree() < 1) return out;
    Field F = f.field();
    UPoly one = UPoly::constant(F, 1);
    UPoly c = gcd(f, f.derivative());
    UPoly w = f / c;
    int i = 1;
    while (!w.is_constant()) {
        UPoly y = gcd(w, c);
        UPoly fac = (w / y).monic();
        if (!fac.is_constant()) out.push_back({fac, i});
        w = y;
        c = c / y;
        ++i;
    }
    if (!c.is_constant()) {
        UPoly r;
        if (!c.sqrt(r)) throw InternalCheckFailed("squarefree decomposition: residual is not a square");
        for (auto& [g, k] : squarefree_decomposition(r)) {
            bool merged = false;
            for (auto& [g2, k2] : out)
                if (k2 == 2 * k) {
                    g2 = (g2 * g).monic();
                    merged = true;
                }
            if (!merged) out.push_back({g, 2 * k});
        }
    }
    std::sort(out.begin(), out.end(), [](auto& a, auto& b) { return a.second < b.second; });
    return out;
}

int distinct_root_count(const UPoly& f) {
    int n = 0;
    for (auto& [g, k] : squarefree_decomposition(f)) n += g.degree();
    return n;
}

namespace {

// X^(q^d) mod m, computed by d successive q-th powers.
UPoly frob_x(const UPoly& m, int d) {
    Field F = m.field();
    UPoly x = UPoly::x(F) % m;
    for (int i = 0; i < d; ++i) x = x.powmod(F->size(), m);
    return x;
}

UPoly squarefree_part(const UPoly& f) {
    UPoly r = UPoly::constant(f.field(), 1);
    for (auto& [g, k] : squarefree_decomposition(f)) r *= g;
    return r;
}

void split_linear(const UPoly& g, std::vector<uint64_t>& out) {
    Field F = g.field();
    if (g.degree() <= 0) return;
    if (g.degree() == 1) {
        UPoly m = g.monic();
        out.push_back(m[0]);
        return;
    }
    int n = F->degree();
    for (int j = 0; j < n; ++j) {
        uint64_t delta = uint64_t(1) << j;
        // Tr(delta X) mod g
        UPoly t = UPoly::monomial(F, delta, 1) % g;
        UPoly acc = t;
        for (int i = 1; i < n; ++i) {
            t = (t * t) % g;
            acc += t;
        }
        UPoly h = gcd(g, acc);
        if (h.degree() > 0 && h.degree() < g.degree()) {
            split_linear(h, out);
            split_linear(g / h, out);
            return;
        }
    }
    throw InternalCheckFailed("root splitting failed");
}

}  // namespace

std::vector<uint64_t> roots_in_field(const UPoly& f) {
    std::vector<uint64_t> out;
    if (f.degree() < 1) return out;
    Field F = f.field();
    if (F->size() <= 64) {
        for (uint64_t a = 0; a < F->size(); ++a)
            if (f.eval(a) == 0) out.push_back(a);
        return out;
    }
    UPoly m = squarefree_part(f).monic();
    UPoly xq = frob_x(m, 1);
    UPoly g = gcd(m, xq + UPoly::x(F));
    split_linear(g, out);
    std::sort(out.begin(), out.end());
    return out;
}

int splitting_degree(const UPoly& f) {
    if (f.degree() < 1) return 1;
    UPoly m = squarefree_part(f).monic();
    int l = 1;
    int d = 0;
    UPoly x = UPoly::x(m.field());
    UPoly xp = x % m;
    while (m.degree() > 0) {
        ++d;
        xp = xp.powmod(m.field()->size(), m);
        UPoly g = gcd(m, xp + x);
        if (g.degree() > 0) {
            l = std::lcm(l, d);
            m = m / g;
            xp = xp % m;
        }
    }
    return l;
}

bool is_irreducible(const UPoly& f) {
    int n = f.degree();
    if (n < 1) return false;
    if (n == 1) return true;
    UPoly m = f.monic();
    if (gcd(m, m.derivative()).degree() > 0) return false;
    UPoly x = UPoly::x(m.field());
    UPoly xp = x % m;
    for (int d = 1; d <= n / 2; ++d) {
        xp = xp.powmod(m.field()->size(), m);
        if (gcd(m, xp + x).degree() > 0) return false;
    }
    return true;
}

Embedding::Embedding(Field from, Field to) : from_(from), to_(to) {
    int n = from->degree();
    if (to->degree() % n != 0) throw InvalidField("embedding: degree does not divide");
    uint64_t r = 1;
    if (n > 1) {
        std::vector<uint64_t> c(n + 1);
        for (int i = 0; i <= n; ++i) c[i] = (from->modulus() >> i) & 1;
        auto roots = roots_in_field(UPoly(to, c));
        if (roots.empty()) throw InternalCheckFailed("embedding: modulus has no root");
        r = roots.front();
    }
    uint64_t p = 1;
    for (int i = 0; i < n; ++i) {
        img_.push_back(p);
        p = to->mul(p, r);
    }
}

uint64_t Embedding::operator()(uint64_t a) const {
    uint64_t r = 0;
    for (size_t i = 0; i < img_.size(); ++i)
        if ((a >> i) & 1) r ^= img_[i];
    return r;
}

bool Embedding::preimage(uint64_t b, uint64_t& a) const {
    // Gaussian elimination on the image vectors, tracking combinations.
    std::vector<std::pair<uint64_t, uint64_t>> rows;  // (vector, combination)
    for (size_t i = 0; i < img_.size(); ++i) {
        uint64_t v = img_[i], comb = uint64_t(1) << i;
        for (auto& [rv, rc] : rows)
            if (v & (uint64_t(1) << f2_degree(rv))) {
                v ^= rv;
                comb ^= rc;
            }
        if (v) {
            rows.push_back({v, comb});
            std::sort(rows.begin(), rows.end(), [](auto& x, auto& y) { return x.first > y.first; });
        }
    }
    uint64_t comb = 0;
    for (auto& [rv, rc] : rows)
        if (b & (uint64_t(1) << f2_degree(rv))) {
            b ^= rv;
            comb ^= rc;
        }
    if (b) return false;
    a = comb;
    return true;
}

Extension extend(Field base, int r) {
    static std::mutex mu;
    static std::map<std::pair<Field, int>, Embedding> cache;
    Field big = default_field(base->degree() * r);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find({base, r});
        if (it != cache.end()) return {big, it->second};
    }
    Embedding e(base, big);
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(std::make_pair(base, r), e);
    return {big, e};
}

}  // namespace rq
