#include <random>

#include "doctest.h"
#include "rq/errors.hpp"
#include "rq/isomorphisms.hpp"
#include "rq/parse.hpp"
#include "support.hpp"

using namespace rq;
using namespace rqtest;

namespace {
Field F2() { return default_field(1); }
ScalarK K(const char* s, Field f = F2()) { return parse_element(s, f); }

FamilyParams random_source(std::mt19937_64& g, FamilyTag tag, Field f) {
    auto any = [&] { return random_scalar(g, f, 2); };
    auto nz = [&] { return random_nonzero(g, f, 2); };
    auto ns = [&] { return random_nonsquare(g, f, 2); };
    switch (tag) {
        case FamilyTag::III: return make_params(tag, ns(), nz(), nz(), any());
        case FamilyTag::IV: return make_params(tag, any(), ns(), any(), ScalarK(f));
        default: return make_params(tag, ns(), ns(), any(), nz());
    }
}
const FamilyTag kTags[] = {FamilyTag::III, FamilyTag::IV, FamilyTag::V};
}  // namespace

TEST_CASE("apply_iso examples") {
    Field f = F2();
    auto m3 = build_family(make_params(FamilyTag::III, f, "t", "1", "1", "0"));
    CHECK(apply_iso(m3, identity_witness(FamilyTag::III, f)).params == m3.params);
    auto w = make_witness(FamilyTag::III, f, {"0", "0", "0", "1"});
    CHECK(iso_epsilon(w, m3.params) == K("t"));
    auto t3 = apply_iso(m3, w);
    CHECK(t3.params == make_params(FamilyTag::III, f, "1/t^5", "1/t^3", "t", "t^2"));
    CHECK(*invariant(t3) == K("1"));

    auto m4 = build_family(make_params(FamilyTag::IV, f, "0", "t", "0"));
    auto w4 = make_witness(FamilyTag::IV, f, {"0", "1", "1", "0"});
    CHECK(iso_epsilon(w4, m4.params) == K("1"));
    CHECK(iso_gamma(w4, m4.params) == K("t"));
    CHECK(apply_iso(m4, w4).params == make_params(FamilyTag::IV, f, "1", "t", "0"));

    CHECK_THROWS_AS(apply_iso(m3, make_witness(FamilyTag::III, f, {"1", "1", "0", "0"})), EpsilonZero);
    CHECK_THROWS_AS(apply_iso(m3, w4), UsageError);
}

TEST_CASE("iso_maps examples") {
    Field f = F2();
    auto p4 = make_params(FamilyTag::IV, f, "0", "t", "0");
    auto m = iso_maps(make_witness(FamilyTag::IV, f, {"0", "1", "1", "0"}), p4);
    CHECK(m.z_text() == "z");
    CHECK(m.y_text() == "y + z");
    CHECK(!m.is_identity());
    for (FamilyTag tag : kTags) {
        std::mt19937_64 g(1);
        auto im = iso_maps(identity_witness(tag, f), random_source(g, tag, f));
        CHECK(im.is_identity());
        CHECK(im.z_text() == "z");
        CHECK(im.y_text() == "y");
    }
    auto m3 = iso_maps(make_witness(FamilyTag::III, f, {"0", "0", "0", "1"}),
                       make_params(FamilyTag::III, f, "t", "1", "1", "0"));
    CHECK(m3.den == parse_form("z", f));
    CHECK(m3.z_num == parse_form("t", f));
    CHECK(m3.z_scale == K("t^3"));
}

TEST_CASE("verify_iso examples") {
    Field f = F2();
    auto m4 = build_family(make_params(FamilyTag::IV, f, "0", "t", "0"));
    auto w4 = make_witness(FamilyTag::IV, f, {"0", "1", "1", "0"});
    auto chk = verify_iso(m4, apply_iso(m4, w4), w4);
    CHECK(chk.ok);
    CHECK(chk.lambda == K("1"));
    CHECK(verify_iso(m4, m4, identity_witness(FamilyTag::IV, f)).lambda == K("1"));
    auto wrong = build_family(make_params(FamilyTag::IV, f, "t", "t", "0"));
    CHECK_THROWS_AS(verify_iso(m4, wrong, w4), SubstitutionMismatch);
}

TEST_CASE("isomorphism suite: soundness, closure, invariants") {
    for (int m : {1, 2}) {
        Field f = default_field(m);
        for (FamilyTag tag : kTags) {
            auto g = make_rng(m, tag_name(tag));
            for (int i = 0; i < 100; ++i) {
                auto src = build_family(random_source(g, tag, f));
                auto w = random_witness(g, src.params);
                QuarticModel tgt;
                REQUIRE_NOTHROW(tgt = apply_iso(src, w));
                CHECK_NOTHROW(check_family_constraints(tgt.params));
                CHECK(verify_iso(src, tgt, w).ok);
                if (tag != FamilyTag::IV) CHECK(*invariant(tgt) == *invariant(src));
            }
        }
    }
}

TEST_CASE("printed c' of family V is not an isomorphism") {
    // the printed (1 + eps d)(mu3^2 + mu4 mu5) term, kept as a record of the conflict
    Field f = F2();
    auto src = build_family(make_params(FamilyTag::V, f, "t", "t", "1", "1"));
    auto w = make_witness(FamilyTag::V, f, {"0", "t", "1", "0"});
    auto tgt = apply_iso(src, w);
    ScalarK e = iso_epsilon(w, src.params), k = w.mu[3] * w.mu[3] + w.mu[4] * w.mu[5];
    FamilyParams printed = tgt.params;
    printed.c = printed.c + (k + e * src.params.d) * k + (K("1") + e * src.params.d) * k;
    REQUIRE(!(printed == tgt.params));
    CHECK(verify_iso(src, tgt, w).ok);
    CHECK_THROWS_AS(verify_iso(src, build_family(printed), w), SubstitutionMismatch);
}

TEST_CASE("search_automorphisms") {
    Field f = F2();
    auto m3 = build_family(make_params(FamilyTag::III, f, "t", "1", "1", "0"));
    CHECK(search_automorphisms(m3, 7, 100).empty());
    CHECK(search_automorphisms(m3, 7, 0).empty());
    auto m5 = build_family(make_params(FamilyTag::V, f, "t", "t", "1", "1"));
    CHECK(search_automorphisms(m5, 1, 50).empty());
    for (FamilyTag tag : kTags) {
        std::mt19937_64 g(2);
        auto m = build_family(random_source(g, tag, f));
        auto w = identity_witness(tag, f);
        CHECK(apply_iso(m, w).params == m.params);
        CHECK(iso_maps(w, m.params).is_identity());
    }
}
