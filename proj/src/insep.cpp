#include "rq/insep.hpp"

namespace rq {

InsepElem::InsepElem(const ScalarK& a) : f_(a.field()) {
    c_ = {a, ScalarK(f_), ScalarK(f_), ScalarK(f_)};
}

InsepElem InsepElem::s(Field f) {
    return InsepElem(f, {ScalarK(f), ScalarK(f, 1), ScalarK(f), ScalarK(f)});
}

bool InsepElem::is_zero() const {
    for (auto& c : c_)
        if (!c.is_zero()) return false;
    return true;
}

InsepElem InsepElem::operator+(const InsepElem& o) const {
    InsepElem r = *this;
    for (int i = 0; i < 4; ++i) r.c_[i] += o.c_[i];
    return r;
}

InsepElem InsepElem::operator*(const InsepElem& o) const {
    std::array<ScalarK, 7> prod;
    prod.fill(ScalarK(f_));
    for (int i = 0; i < 4; ++i) {
        if (c_[i].is_zero()) continue;
        for (int j = 0; j < 4; ++j)
            if (!o.c_[j].is_zero()) prod[i + j] += c_[i] * o.c_[j];
    }
    ScalarK t = ScalarK::t(f_);
    InsepElem r(f_, {prod[0], prod[1], prod[2], prod[3]});
    for (int k = 4; k < 7; ++k)
        if (!prod[k].is_zero()) r.c_[k - 4] += prod[k] * t;
    return r;
}

InsepElem InsepElem::operator*(const ScalarK& a) const {
    InsepElem r = *this;
    for (auto& c : r.c_) c *= a;
    return r;
}

InsepElem InsepElem::pow(int e) const {
    InsepElem r(ScalarK(f_, 1)), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

std::string InsepElem::to_string() const {
    static const char* basis[4] = {"", "t^(1/4)", "t^(1/2)", "t^(3/4)"};
    std::string s;
    for (int i = 0; i < 4; ++i) {
        if (c_[i].is_zero()) continue;
        std::string cs = c_[i].to_string();
        std::string term;
        if (i == 0)
            term = cs;
        else if (c_[i].is_one())
            term = basis[i];
        else {
            bool compound = cs.find_first_of("+/ ") != std::string::npos;
            term = (compound ? "(" + cs + ")" : cs) + "*" + basis[i];
        }
        if (!s.empty()) s += " + ";
        s += term;
    }
    return s.empty() ? "0" : s;
}

namespace {

// Coefficientwise 2^k-th root of a polynomial in t, as an element of K^(1/4):
// t^i becomes s^(i * 4 / 2^k).
InsepElem root_of_poly(const UPoly& p, int k) {
    Field f = p.field();
    int step = 4 >> k;  // exponent of s per power of t
    std::array<std::vector<uint64_t>, 4> parts;
    for (int i = 0; i <= p.degree(); ++i) {
        uint64_t c = p[i];
        if (!c) continue;
        for (int j = 0; j < k; ++j) c = f->sqrt(c);
        int e = i * step;
        auto& v = parts[e % 4];
        if (int(v.size()) <= e / 4) v.resize(e / 4 + 1, 0);
        v[e / 4] ^= c;
    }
    std::array<ScalarK, 4> c;
    for (int i = 0; i < 4; ++i) c[i] = ScalarK::from_poly(UPoly(f, parts[i]));
    return InsepElem(f, c);
}

InsepElem root(const ScalarK& a, int k) {
    // (n/d)^(1/2^k) = n^(1/2^k) d^((2^k - 1)/2^k) / d
    InsepElem n = root_of_poly(a.num(), k), d = root_of_poly(a.den(), k);
    return n * d.pow((1 << k) - 1) * ScalarK(a.den(), UPoly::constant(a.field(), 1)).inv();
}

}  // namespace

InsepElem fourth_root(const ScalarK& a) { return root(a, 2); }
InsepElem square_root(const ScalarK& a) { return root(a, 1); }

InsepElem eval_insep(const TriForm& f, const std::array<InsepElem, 3>& p) {
    Field F = f.field();
    InsepElem acc(ScalarK(F, 0));
    std::array<std::vector<InsepElem>, 3> powers;
    for (int i = 0; i < 3; ++i) powers[i].push_back(InsepElem(ScalarK(F, 1)));
    auto power = [&](int i, int k) -> const InsepElem& {
        while (int(powers[i].size()) <= k) powers[i].push_back(powers[i].back() * p[i]);
        return powers[i][k];
    };
    for (auto& [e, c] : f.terms()) {
        InsepElem t(c);
        for (int i = 0; i < 3; ++i)
            if (e[i]) t = t * power(i, e[i]);
        acc = acc + t;
    }
    return acc;
}

int subalgebra_dimension(const std::vector<InsepElem>& gens) {
    if (gens.empty()) return 1;
    Field f = gens.front().field();
    // echelon basis: rows with distinct pivot columns
    std::vector<std::array<ScalarK, 4>> rows;
    std::vector<int> pivots;
    auto reduce = [&](std::array<ScalarK, 4> v) {
        for (size_t r = 0; r < rows.size(); ++r) {
            int p = pivots[r];
            if (v[p].is_zero()) continue;
            ScalarK k = v[p];
            for (int j = 0; j < 4; ++j) v[j] -= k * rows[r][j];
        }
        return v;
    };
    std::vector<InsepElem> basis;
    auto insert = [&](const InsepElem& x) {
        auto v = reduce(x.coords());
        int p = -1;
        for (int j = 0; j < 4; ++j)
            if (!v[j].is_zero()) {
                p = j;
                break;
            }
        if (p < 0) return false;
        ScalarK inv = v[p].inv();
        for (auto& c : v) c *= inv;
        // keep previous rows reduced at the new pivot
        for (auto& row : rows) {
            if (row[p].is_zero()) continue;
            ScalarK k = row[p];
            for (int j = 0; j < 4; ++j) row[j] -= k * v[j];
        }
        rows.push_back(v);
        pivots.push_back(p);
        basis.push_back(x);
        return true;
    };
    insert(InsepElem(ScalarK(f, 1)));
    for (auto& g : gens) insert(g);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<InsepElem> cur = basis;
        for (size_t i = 0; i < cur.size(); ++i)
            for (size_t j = i; j < cur.size(); ++j)
                if (insert(cur[i] * cur[j])) grew = true;
    }
    return int(rows.size());
}

}  // namespace rq
