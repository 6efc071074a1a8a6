#include <random>

#include "doctest.h"
#include "rq/errors.hpp"
#include "rq/parse.hpp"
#include "rq/tower.hpp"
#include "support.hpp"

using namespace rq;
using namespace rqtest;

namespace {
Field F2() { return default_field(1); }
ScalarK K(const char* s, Field f = F2()) { return parse_element(s, f); }
TowerPresentation P(TowerKind k, std::vector<std::string> v) { return make_presentation(k, F2(), v); }

TowerPresentation random_presentation(std::mt19937_64& g, TowerKind k, Field f, bool nonhyp = true) {
    auto any = [&] { return random_scalar(g, f, 2); };
    auto nz = [&] { return random_nonzero(g, f, 2); };
    auto ns = [&] { return random_nonsquare(g, f, 2); };
    switch (k) {
        case TowerKind::A: return make_presentation(k, {any(), nz(), ns(), any(), nonhyp ? nz() : ScalarK(f)});
        case TowerKind::B: return make_presentation(k, {ns(), any(), any()});
        case TowerKind::C: return make_presentation(k, {any(), ns(), ns(), any(), nonhyp ? nz() : ScalarK(f)});
        case TowerKind::D: {
            ScalarK a2 = ns(), r = any();
            return make_presentation(k, {any(), a2, any(), r * r * a2});
        }
    }
    return {};
}
}  // namespace

TEST_CASE("validate_presentation") {
    auto r = validate_presentation(P(TowerKind::A, {"0", "1", "t", "0", "1"}));
    REQUIRE(r.rels.size() == 2);
    CHECK(r.rels[0].to_string() == "z^2 = t*x^4 + (t + 1)*x^2 + x");
    CHECK(r.rels[1].to_string() == "y^2 = x^3 + x^2*z + x^2 + x*z");
    CHECK_THROWS_AS(validate_presentation(P(TowerKind::A, {"0", "1", "t^2", "0", "1"})), ConstraintViolation);
    CHECK_THROWS_AS(validate_presentation(P(TowerKind::A, {"0", "0", "t", "0", "1"})), ConstraintViolation);
    CHECK_THROWS_AS(validate_presentation(P(TowerKind::C, {"0", "t", "1", "0", "t"})), ConstraintViolation);
    CHECK(validate_presentation(P(TowerKind::B, {"t", "0", "1"})).rels.size() == 3);
    CHECK(validate_presentation(P(TowerKind::C, {"0", "t", "t", "0", "t"})).rels.size() == 3);
    CHECK(validate_presentation(P(TowerKind::D, {"0", "t", "0", "t^3"})).rels.size() == 2);
    CHECK_THROWS_AS(validate_presentation(P(TowerKind::D, {"0", "t", "0", "1"})), ConstraintViolation);
    CHECK_THROWS_AS(make_presentation(TowerKind::B, F2(), {"t", "0"}), UsageError);
}

TEST_CASE("is_nonhyperelliptic") {
    CHECK(!is_nonhyperelliptic(P(TowerKind::A, {"0", "1", "t", "0", "0"})));
    CHECK(is_nonhyperelliptic(P(TowerKind::A, {"0", "1", "t", "0", "1"})));
    CHECK(is_nonhyperelliptic(P(TowerKind::B, {"t", "0", "1"})));
    CHECK(!is_nonhyperelliptic(P(TowerKind::C, {"0", "t", "t", "0", "0"})));
    CHECK(!is_nonhyperelliptic(P(TowerKind::D, {"0", "t", "0", "t"})));
}

TEST_CASE("to_quartic_model examples") {
    Field f = F2();
    CHECK(to_quartic_model(P(TowerKind::A, {"0", "1", "t", "0", "1"})) ==
          make_params(FamilyTag::III, f, "t", "1", "1", "0"));
    CHECK(to_quartic_model(P(TowerKind::B, {"t", "0", "1"})) == make_params(FamilyTag::IV, f, "0", "t", "1"));
    CHECK(to_quartic_model(P(TowerKind::C, {"0", "t", "t", "0", "t"})) ==
          make_params(FamilyTag::V, f, "1/t", "t", "1/t", "1"));
    CHECK_THROWS_AS(to_quartic_model(P(TowerKind::A, {"0", "1", "t", "0", "0"})), Hyperelliptic);
    CHECK_THROWS_AS(to_quartic_model(P(TowerKind::D, {"0", "t", "0", "t"})), Hyperelliptic);
    // B0 is normalized away by x -> x + B0/B1
    auto m = to_quartic_model(P(TowerKind::A, {"0", "1", "t", "1", "1"}));
    CHECK(m.d == K("0") + K("1") + K("1"));
}

TEST_CASE("invert_model_map") {
    Field f = F2();
    CHECK(invert_model_map(make_params(FamilyTag::III, f, "t", "1", "1", "0")) ==
          P(TowerKind::A, {"0", "1", "t", "0", "1"}));
    CHECK_THROWS_AS(invert_model_map(make_params(FamilyTag::III, f, "t", "1", "0", "0")), ConstraintViolation);
    std::mt19937_64 g(3);
    for (int m : {1, 2}) {
        Field F = default_field(m);
        for (int k = 0; k < 50; ++k) {
            auto params = make_params(FamilyTag::III, random_nonsquare(g, F, 2), random_nonzero(g, F, 2),
                                      random_nonzero(g, F, 2), random_scalar(g, F, 2));
            CHECK(to_quartic_model(invert_model_map(params)) == params);
            auto pres = normalize(random_presentation(g, TowerKind::A, F));
            CHECK(invert_model_map(to_quartic_model(pres)) == pres);
        }
    }
}

TEST_CASE("breve relations") {
    CHECK(verify_breve_relation(P(TowerKind::A, {"0", "1", "t", "0", "1"})));
    CHECK(verify_breve_relation(P(TowerKind::B, {"t", "0", "1"})));
    CHECK(verify_breve_relation(P(TowerKind::C, {"0", "t", "t", "0", "t"})));

    auto p = P(TowerKind::A, {"0", "1", "t", "0", "1"});
    auto bad = printed_breve_relation(p);
    bad.add_term({1, 1}, K("1"));
    CHECK(!verify_breve_relation(p, bad));
    CHECK(!breve_residual(p, bad).is_zero());

    std::mt19937_64 g(17);
    for (int m : {1, 2})
        for (TowerKind k : {TowerKind::A, TowerKind::B, TowerKind::C})
            for (int i = 0; i < 50; ++i) CHECK(verify_breve_relation(random_presentation(g, k, default_field(m))));
}

TEST_CASE("nonhyperelliptic iff the derived model builds") {
    std::mt19937_64 g(23);
    for (TowerKind k : {TowerKind::A, TowerKind::B, TowerKind::C})
        for (int i = 0; i < 60; ++i) {
            auto p = random_presentation(g, k, F2(), i % 2 == 0);
            bool built = true;
            try {
                build_family(to_quartic_model(p));
            } catch (const Error&) {
                built = false;
            }
            CHECK(built == is_nonhyperelliptic(p));
        }
}

TEST_CASE("invariants and automorphisms") {
    auto a = tower_invariant_and_aut(P(TowerKind::A, {"0", "1", "t", "0", "1"}));
    CHECK(*a.iota == K("1"));
    CHECK(!a.aut_shift);

    auto a0 = tower_invariant_and_aut(P(TowerKind::A, {"0", "1", "t", "0", "0"}));
    CHECK(a0.iota->is_zero());
    CHECK(*a0.aut_shift == K("1"));

    auto c0 = tower_invariant_and_aut(P(TowerKind::C, {"0", "t", "t", "0", "0"}));
    CHECK(c0.iota->is_zero());
    CHECK(*c0.aut_shift == K("1/t"));

    auto b = tower_invariant_and_aut(P(TowerKind::B, {"t", "0", "1"}));
    CHECK(!b.iota);
    CHECK(!b.aut_shift);
    CHECK_THROWS_AS(tower_invariant_and_aut(P(TowerKind::D, {"0", "t", "0", "t"})), UnsupportedKind);

    // the shift is not an automorphism once B1 != 0
    CHECK(!preserves_relations(P(TowerKind::A, {"0", "1", "t", "0", "1"}), K("1")));
    CHECK(!preserves_relations(P(TowerKind::C, {"0", "t", "t", "0", "0"}), K("1")));

    // iota_tower != 0 iff iota_quartic != 0
    std::mt19937_64 g(29);
    for (int i = 0; i < 50; ++i) {
        auto p = random_presentation(g, TowerKind::A, F2());
        CHECK(!tower_invariant_and_aut(p).iota->is_zero());
        CHECK(!invariant(to_quartic_model(p))->is_zero());
    }
}

TEST_CASE("pseudocanonical field") {
    CHECK(pseudocanonical_E_equals_F2(P(TowerKind::B, {"t", "0", "1"})));
    CHECK(!pseudocanonical_E_equals_F2(P(TowerKind::A, {"0", "1", "t", "0", "1"})));
    CHECK(!pseudocanonical_E_equals_F2(P(TowerKind::C, {"0", "t", "t", "0", "t"})));
    CHECK_THROWS_AS(pseudocanonical_E_equals_F2(P(TowerKind::D, {"0", "t", "0", "t"})), UnsupportedKind);
}

TEST_CASE("K^2-span decomposition") {
    std::mt19937_64 g(31);
    for (int m : {1, 2}) {
        Field f = default_field(m);
        for (int i = 0; i < 100; ++i) {
            ScalarK a = random_nonsquare(g, f, 3), b = random_scalar(g, f, 3);
            auto r = k2_span_decompose(b, a);
            REQUIRE(r);
            CHECK(r->first * r->first + r->second * r->second * a == b);
        }
    }
    CHECK(!k2_span_decompose(K("t"), K("t^2+1")));
    CHECK(k2_span_decompose(K("t^2"), K("1")));
}
