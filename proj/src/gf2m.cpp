#include "rq/gf2m.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include "rq/errors.hpp"

namespace rq {

namespace {

constexpr int kMaxDegree = 32;
constexpr int kTableDegree = 16;

uint64_t clmul_mod(uint64_t a, uint64_t b, int m, uint64_t mod) {
    uint64_t r = 0;
    uint64_t top = uint64_t(1) << m;
    while (b) {
        if (b & 1) r ^= a;
        b >>= 1;
        a <<= 1;
        if (a & top) a ^= mod;
    }
    return r;
}

uint64_t f2_mod(uint64_t a, uint64_t b) {
    int db = f2_degree(b);
    for (int da = f2_degree(a); da >= db; da = f2_degree(a)) a ^= b << (da - db);
    return a;
}

}  // namespace

int f2_degree(uint64_t poly) {
    if (poly == 0) return -1;
    return 63 - __builtin_clzll(poly);
}

bool is_irreducible_f2(uint64_t poly) {
    int d = f2_degree(poly);
    if (d < 1) return false;
    for (uint64_t q = 2; f2_degree(q) <= d / 2; ++q)
        if (f2_mod(poly, q) == 0) return false;
    return true;
}

uint64_t smallest_irreducible(int m) {
    if (m == 1) return 0b11;
    for (uint64_t p = (uint64_t(1) << m) | 1; p < (uint64_t(1) << (m + 1)); p += 2)
        if (is_irreducible_f2(p)) return p;
    throw InvalidField("no irreducible polynomial of degree " + std::to_string(m));
}

GF2m::GF2m(int m, uint64_t modulus) : m_(m), mod_(modulus) {
    if (m < 1 || m > kMaxDegree) throw InvalidField("field degree out of range: " + std::to_string(m));
    if (f2_degree(modulus) != m) throw InvalidField("modulus degree differs from m");
    if (m == 1 ? modulus != 0b11 : !is_irreducible_f2(modulus))
        throw InvalidField("modulus " + modulus_to_string(modulus) + " is not irreducible");
    if (m <= kTableDegree) {
        uint64_t n = size() - 1;
        // find a primitive element
        uint64_t g = 1;
        for (uint64_t cand = (m == 1 ? 1 : 2); cand <= mask(); ++cand) {
            uint64_t x = 1, k = 0;
            do {
                x = clmul_mod(x, cand, m_, mod_);
                ++k;
            } while (x != 1);
            if (k == n) {
                g = cand;
                break;
            }
        }
        exp_.assign(2 * n + 1, 0);
        log_.assign(size(), 0);
        uint64_t x = 1;
        for (uint64_t k = 0; k < n; ++k) {
            exp_[k] = uint32_t(x);
            log_[x] = uint32_t(k);
            x = clmul_mod(x, g, m_, mod_);
        }
        for (uint64_t k = n; k <= 2 * n; ++k) exp_[k] = exp_[k - n];
        tables_ = true;
    }
}

uint64_t GF2m::slow_mul(uint64_t a, uint64_t b) const { return clmul_mod(a, b, m_, mod_); }

uint64_t GF2m::mul(uint64_t a, uint64_t b) const {
    if (a == 0 || b == 0) return 0;
    if (tables_) return exp_[log_[a] + log_[b]];
    return slow_mul(a, b);
}

uint64_t GF2m::pow(uint64_t a, uint64_t e) const {
    if (tables_) {
        if (e == 0) return 1;
        if (a == 0) return 0;
        uint64_t n = size() - 1;
        return exp_[(uint64_t(log_[a]) * (e % n)) % n];
    }
    uint64_t r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

uint64_t GF2m::inv(uint64_t a) const {
    if (a == 0) throw DivisionByZero("inverse of zero in GF(2^" + std::to_string(m_) + ")");
    if (tables_) {
        uint64_t n = size() - 1;
        return exp_[(n - log_[a]) % n];
    }
    return pow(a, size() - 2);
}

uint64_t GF2m::frob(uint64_t a, int k) const {
    k %= m_;
    for (int i = 0; i < k; ++i) a = mul(a, a);
    return a;
}

uint64_t GF2m::sqrt(uint64_t a) const { return frob(a, m_ - 1); }

int GF2m::trace(uint64_t a) const {
    uint64_t t = 0, x = a;
    for (int i = 0; i < m_; ++i) {
        t ^= x;
        x = mul(x, x);
    }
    return int(t & 1);
}

int GF2m::element_degree(uint64_t a) const {
    for (int d = 1; d <= m_; ++d)
        if (m_ % d == 0 && frob(a, d) == a) return d;
    return m_;
}

std::string GF2m::to_string(uint64_t a) const {
    if (a == 0) return "0";
    std::string s;
    for (int i = m_ - 1; i >= 0; --i) {
        if (!((a >> i) & 1)) continue;
        if (!s.empty()) s += "+";
        if (i == 0)
            s += "1";
        else if (i == 1)
            s += "g";
        else
            s += "g^" + std::to_string(i);
    }
    return s;
}

Field field(int m, uint64_t modulus) {
    static std::mutex mu;
    static std::map<std::pair<int, uint64_t>, std::unique_ptr<GF2m>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(m, modulus);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second.get();
    auto f = std::make_unique<GF2m>(m, modulus);
    Field p = f.get();
    cache.emplace(key, std::move(f));
    return p;
}

Field default_field(int m) { return field(m, smallest_irreducible(m)); }

uint64_t parse_modulus(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw InvalidField("empty modulus");
    if (s.find_first_not_of("01") == std::string::npos) {
        if (s.size() > 63) throw InvalidField("modulus too long");
        uint64_t r = 0;
        for (char ch : s) r = (r << 1) | uint64_t(ch - '0');
        return r;
    }
    uint64_t r = 0;
    size_t i = 0;
    while (i < s.size()) {
        size_t j = s.find('+', i);
        if (j == std::string::npos) j = s.size();
        std::string term = s.substr(i, j - i);
        int e;
        if (term == "1")
            e = 0;
        else if (term == "u" || term == "x" || term == "g")
            e = 1;
        else if (term.size() > 2 && (term[0] == 'u' || term[0] == 'x' || term[0] == 'g') && term[1] == '^') {
            try {
                e = std::stoi(term.substr(2));
            } catch (...) {
                throw InvalidField("bad modulus term '" + term + "'");
            }
        } else
            throw InvalidField("bad modulus term '" + term + "'");
        if (e < 0 || e > 62) throw InvalidField("modulus exponent out of range");
        r ^= uint64_t(1) << e;
        i = j + 1;
    }
    return r;
}

std::string modulus_to_string(uint64_t modulus) {
    std::string s;
    for (int i = f2_degree(modulus); i >= 0; --i) {
        if (!((modulus >> i) & 1)) continue;
        if (!s.empty()) s += "+";
        s += i == 0 ? "1" : i == 1 ? "u" : "u^" + std::to_string(i);
    }
    return s.empty() ? "0" : s;
}

}  // namespace rq
