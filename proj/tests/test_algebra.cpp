#include <random>
#include <set>

#include "doctest.h"
#include "rq/errors.hpp"
#include "rq/insep.hpp"
#include "rq/parse.hpp"
#include "support.hpp"

using namespace rq;
using namespace rqtest;

namespace {
Field F2() { return default_field(1); }
Field F4() { return default_field(2); }
ScalarK K(const char* s, Field f = F2()) { return parse_element(s, f); }
TriForm form(const char* s, Field f = F2()) { return parse_form(s, f); }
}  // namespace

TEST_CASE("default moduli") {
    CHECK(F2()->modulus() == 0b11);
    CHECK(F4()->modulus() == 0b111);
    CHECK(default_field(4)->modulus() == 0b10011);
    CHECK(F2()->gen() == 1);
    CHECK_THROWS_AS(field(2, 0b101), InvalidField);
    CHECK(parse_modulus("u^4+u+1") == 0b10011);
    CHECK(parse_modulus("111") == 0b111);
}

TEST_CASE("GF field axioms on random samples") {
    std::mt19937_64 g(11);
    for (int m : {1, 2, 3, 4, 8, 13, 20}) {
        Field f = default_field(m);
        for (int k = 0; k < 200; ++k) {
            uint64_t a = g() & f->mask(), b = g() & f->mask(), c = g() & f->mask();
            CHECK(f->mul(a, f->mul(b, c)) == f->mul(f->mul(a, b), c));
            CHECK(f->mul(a, b ^ c) == (f->mul(a, b) ^ f->mul(a, c)));
            CHECK(f->mul(a, b) == f->mul(b, a));
            if (a) CHECK(f->mul(a, f->inv(a)) == 1);
            CHECK(f->sqrt(f->sqr(a)) == a);
            CHECK(f->sqr(f->sqrt(a)) == a);
        }
    }
}

TEST_CASE("sqrt of the generator in GF(4)") {
    Field f = F4();
    uint64_t gg = f->gen();
    CHECK(f->sqrt(gg) == (gg ^ 1));
    CHECK(sqrt_element(ScalarK(f, gg)) == ScalarK(f, gg ^ 1));
}

TEST_CASE("parse_element examples") {
    ScalarK a = K("t^2+1");
    CHECK(a.num().to_string() == "t^2 + 1");
    CHECK(a.den().is_one());
    ScalarK b = K("(t^3+t)/(t^4+t^2)");
    CHECK(b.num().is_one());
    CHECK(b.den() == UPoly::x(F2()));
    CHECK_THROWS_AS(K("1/0"), DivisionByZero);
    CHECK_THROWS_AS(K("t +* 1"), SyntaxError);
    try {
        K("t + )");
        FAIL("no throw");
    } catch (const SyntaxError& e) {
        CHECK(std::string(e.what()).find("position 4") != std::string::npos);
    }
    CHECK(K("3*t") == K("t"));
    CHECK(K("2*t") == K("0"));
    CHECK(K("-t") == K("t"));
    CHECK_THROWS_AS(parse_element("x + 1", F2()), SyntaxError);
    CHECK_THROWS_AS(parse_form("y/x", F2()), SyntaxError);
}

TEST_CASE("is_square examples and brute-force oracle") {
    CHECK_FALSE(is_square(K("t")));
    CHECK(is_square(K("t^2+1")));
    CHECK(is_square(K("t^2/(t^2+1)")));
    Field f = F2();
    std::vector<UPoly> polys;
    for (uint64_t bits = 0; bits < 16; ++bits) {
        std::vector<uint64_t> c;
        for (int i = 0; i < 4; ++i) c.push_back((bits >> i) & 1);
        polys.push_back(UPoly(f, c));
    }
    std::set<std::string> squares;
    for (auto& n : polys)
        for (auto& d : polys)
            if (!d.is_zero()) {
                ScalarK r(n, d);
                squares.insert((r * r).to_string());
            }
    int checked = 0;
    for (auto& n : polys)
        for (auto& d : polys)
            if (!d.is_zero()) {
                ScalarK x(n, d);
                CHECK(is_square(x) == (squares.count(x.to_string()) == 1));
                ++checked;
            }
    CHECK(checked == 16 * 15);
}

TEST_CASE("sqrt_element") {
    CHECK(sqrt_element(K("t^2+1")) == K("t+1"));
    CHECK(sqrt_element(K("0")).is_zero());
    CHECK_THROWS_AS(sqrt_element(K("t")), NotASquare);
    std::mt19937_64 g(5);
    for (int k = 0; k < 100; ++k) {
        ScalarK x = random_scalar(g, F4(), 4);
        CHECK(sqrt_element(x * x) == x);
    }
}

TEST_CASE("ScalarK normalization and ring laws") {
    std::mt19937_64 g(3);
    for (Field f : {F2(), F4()}) {
        for (int k = 0; k < 200; ++k) {
            ScalarK a = random_scalar(g, f, 3), b = random_scalar(g, f, 3), c = random_scalar(g, f, 3);
            for (const ScalarK& r : {a + b, a * b, (a + b) * c}) {
                CHECK(r.den().lead() == 1);
                CHECK(gcd(r.num(), r.den()).is_one());
            }
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            if (!b.is_zero()) CHECK((a / b) * b == a);
        }
    }
    CHECK(ScalarK(F2()).den().is_one());
}

TEST_CASE("parse and print round-trip") {
    std::mt19937_64 g(17);
    for (Field f : {F2(), F4(), default_field(3)}) {
        for (int k = 0; k < 100; ++k) {
            ScalarK a = random_scalar(g, f, 4);
            CHECK(parse_element(a.to_string(), f) == a);
            TriForm p = random_form(g, f, 4, 6, 2);
            CHECK(parse_form(form_to_string(p), f) == p);
        }
    }
    CHECK(form_to_string(form("y^4 + x*z^3 + t*x^3*z")) == "y^4 + t*x^3*z + x*z^3");
}

TEST_CASE("partial derivatives") {
    CHECK(partial_derivative(form("x*z^3"), Z) == form("x*z^2"));
    TriForm f = parse_form("y^4 + t*z^4 + x*z^3 + (t+1)*x^3*z + t^3*x^4", F2());
    CHECK(partial_derivative(f, Y).is_zero());
    CHECK(partial_derivative(form("x^3*z"), X) == form("x^2*z"));
}

TEST_CASE("eval_form") {
    Field f = F2();
    FormFq p = parse_form_fq("y^4 + x*z^3", f);
    CHECK(eval_form(p, {1, 0, 1}) == 1);
    CHECK(eval_form(p, {1, 1, 1}) == 0);
    CHECK(eval_form(p, {0, 0, 1}) == 0);
    // homogeneity: scaling by lambda multiplies by lambda^4
    Field f16 = default_field(4);
    FormFq q = parse_form_fq("y^4 + g*x*z^3 + x^2*y*z", f16);
    std::mt19937_64 g(1);
    for (int k = 0; k < 50; ++k) {
        uint64_t a = g() & 15, b = g() & 15, c = g() & 15, l = (g() & 14) | 1;
        uint64_t v1 = eval_form(q, {a, b, c});
        uint64_t v2 = eval_form(q, {f16->mul(l, a), f16->mul(l, b), f16->mul(l, c)});
        CHECK(v2 == f16->mul(f16->pow(l, 4), v1));
    }
}

TEST_CASE("form_square_root") {
    CHECK(*form_square_root(form("y^4 + x^2*z^2")) == form("y^2 + x*z"));
    Field f = F4();
    auto r = form_square_root(parse_form("y^4 + (1+g)*z^4 + x^2*z^2 + g^2*x^4", f));
    REQUIRE(r);
    CHECK(*r == parse_form("y^2 + g*z^2 + x*z + g*x^2", f));
    CHECK_FALSE(form_square_root(form("y^4 + x*z^3")));
    CHECK_FALSE(form_square_root(form("t*y^4")));
}

TEST_CASE("divide_form") {
    auto q = divide_form(form("z^4 + y^2*z^2 + x*z^3 + x^2*y^2 + x^3*z + x^4"), form("z^2 + x^2"));
    REQUIRE(q);
    CHECK(*q == form("y^2 + x*z + z^2 + x^2"));
    TriForm f = form("y^4 + t*x*z^3");
    CHECK(*divide_form(f, form("1")) == f);
    CHECK_FALSE(divide_form(form("y^4 + x*z^3"), form("x")));
    CHECK_THROWS_AS(divide_form(f, TriForm(F2())), ZeroDivisor);
}

TEST_CASE("square root and division reconstruction on random forms") {
    std::mt19937_64 g(23);
    for (int k = 0; k < 100; ++k) {
        Field f = k % 2 ? F2() : F4();
        TriForm a = random_form(g, f, 2, 4, 2), b = random_form(g, f, 2, 3, 1);
        if (a.is_zero() || b.is_zero()) continue;
        auto s = form_square_root(a * a);
        REQUIRE(s);
        CHECK(*s * *s == a * a);
        auto q = divide_form(a * b, b);
        REQUIRE(q);
        CHECK(*q == a);
    }
}

TEST_CASE("subalgebra_dimension") {
    Field f = F2();
    ScalarK t = ScalarK::t(f);
    CHECK(subalgebra_dimension({fourth_root(t)}) == 4);
    CHECK(subalgebra_dimension({square_root(t)}) == 2);
    CHECK(subalgebra_dimension({square_root(t), square_root(t.pow(3))}) == 2);
    CHECK(subalgebra_dimension({InsepElem(t)}) == 1);
    CHECK(subalgebra_dimension({fourth_root(t * t)}) == 2);
    CHECK(subalgebra_dimension({fourth_root(t.pow(4) + ScalarK(f, 1))}) == 1);
    // monotone in the generator set
    std::mt19937_64 g(2);
    for (int k = 0; k < 40; ++k) {
        ScalarK a = random_scalar(g, f, 3), b = random_scalar(g, f, 3);
        int da = subalgebra_dimension({fourth_root(a)});
        int dab = subalgebra_dimension({fourth_root(a), square_root(b)});
        CHECK(da <= dab);
        CHECK(4 % dab == 0);
        CHECK((da == 1) == fourth_root(a).in_K());
    }
}

TEST_CASE("fourth roots") {
    std::mt19937_64 g(8);
    for (int k = 0; k < 50; ++k) {
        ScalarK a = random_scalar(g, F4(), 4);
        CHECK(fourth_root(a).pow(4) == InsepElem(a));
        CHECK(square_root(a).pow(2) == InsepElem(a));
    }
}

TEST_CASE("univariate helpers") {
    Field f = default_field(4);
    UPoly x = UPoly::x(f);
    UPoly one = UPoly::constant(f, 1);
    UPoly p = (x + one).pow(3) * (x * x + x + one).pow(2) * x;
    auto sf = squarefree_decomposition(p);
    REQUIRE(sf.size() == 3);
    CHECK(sf[0].second == 1);
    CHECK(sf[1].second == 2);
    CHECK(sf[2].second == 3);
    CHECK(distinct_root_count(p) == 4);
    auto roots = roots_in_field(p);
    CHECK(roots.size() == 4);  // x^2+x+1 splits over GF(16)
    CHECK(splitting_degree(x * x + x + one) == 1);
    Field f2 = F2();
    UPoly y = UPoly::x(f2), o = UPoly::constant(f2, 1);
    CHECK(splitting_degree(y * y + y + o) == 2);
    CHECK(splitting_degree((y * y + y + o) * (y.pow(3) + y + o)) == 6);
    CHECK(is_irreducible(y.pow(3) + y + o));
    CHECK_FALSE(is_irreducible(y.pow(2) + o));
}

TEST_CASE("embeddings") {
    Field f4 = F4();
    auto ext = extend(f4, 2);
    CHECK(ext.big->degree() == 4);
    for (uint64_t a = 0; a < 4; ++a)
        for (uint64_t b = 0; b < 4; ++b) {
            CHECK(ext.emb(f4->mul(a, b)) == ext.big->mul(ext.emb(a), ext.emb(b)));
            uint64_t back;
            REQUIRE(ext.emb.preimage(ext.emb(a), back));
            CHECK(back == a);
        }
    int outside = 0;
    for (uint64_t v = 0; v < 16; ++v) {
        uint64_t back;
        if (!ext.emb.preimage(v, back)) ++outside;
    }
    CHECK(outside == 12);
}
