#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rq {

// GF(2^m) = F2[u]/(modulus). Elements are bit vectors in the power basis,
// bit i being the coefficient of u^i. Instances are interned (see field())
// and never destroyed, so raw pointers to them stay valid for the whole run.
class GF2m {
public:
    GF2m(int m, uint64_t modulus);

    int degree() const { return m_; }
    uint64_t modulus() const { return mod_; }
    uint64_t size() const { return uint64_t(1) << m_; }
    uint64_t mask() const { return size() - 1; }

    // Class of u. For m = 1 the modulus is u+1, so this is 1.
    uint64_t gen() const { return m_ == 1 ? 1 : 2; }

    static uint64_t add(uint64_t a, uint64_t b) { return a ^ b; }
    uint64_t mul(uint64_t a, uint64_t b) const;
    uint64_t sqr(uint64_t a) const { return mul(a, a); }
    uint64_t inv(uint64_t a) const;
    uint64_t div(uint64_t a, uint64_t b) const { return mul(a, inv(b)); }
    uint64_t pow(uint64_t a, uint64_t e) const;
    uint64_t sqrt(uint64_t a) const;  // inverse Frobenius
    uint64_t frob(uint64_t a, int k) const;  // a^(2^k)
    int trace(uint64_t a) const;
    bool in_subfield(uint64_t a, int d) const { return frob(a, d) == a; }
    // Smallest d dividing m with a in GF(2^d).
    int element_degree(uint64_t a) const;

    std::string to_string(uint64_t a) const;

private:
    uint64_t slow_mul(uint64_t a, uint64_t b) const;

    int m_;
    uint64_t mod_;
    bool tables_ = false;
    std::vector<uint32_t> log_;
    std::vector<uint32_t> exp_;
};

using Field = const GF2m*;

bool is_irreducible_f2(uint64_t poly);
uint64_t smallest_irreducible(int m);
int f2_degree(uint64_t poly);

// Interned field lookup. The modulus must be irreducible of degree m;
// for m = 1 the only accepted modulus is u+1.
Field field(int m, uint64_t modulus);
// Smallest irreducible modulus of degree m (u+1 for m = 1).
Field default_field(int m);
// Parses a modulus like "u^2+u+1" or a bit string like "111".
uint64_t parse_modulus(const std::string& text);
std::string modulus_to_string(uint64_t modulus);

// Embedding of a subfield into an extension field; the generator of the
// subfield goes to the smallest root of its modulus in the big field.
class Embedding {
public:
    Embedding(Field from, Field to);
    Field from() const { return from_; }
    Field to() const { return to_; }
    uint64_t operator()(uint64_t a) const;
    // Inverse on the image; returns false if b is not in the image.
    bool preimage(uint64_t b, uint64_t& a) const;

private:
    Field from_;
    Field to_;
    std::vector<uint64_t> img_;  // images of u^i
};

// The field GF(2^(m r)) built from the default modulus of that degree,
// together with the embedding of base.
struct Extension {
    Field big;
    Embedding emb;
};
Extension extend(Field base, int r);

}  // namespace rq
