#include <random>
#include <set>

#include "doctest.h"
#include "rq/errors.hpp"
#include "rq/families.hpp"
#include "rq/parse.hpp"
#include "support.hpp"

using namespace rq;
using namespace rqtest;

namespace {
Field F2() { return default_field(1); }
ScalarK K(const char* s, Field f = F2()) { return parse_element(s, f); }

FamilyParams random_valid(std::mt19937_64& g, FamilyTag tag, Field f) {
    auto any = [&] { return random_scalar(g, f, 2); };
    auto nz = [&] { return random_nonzero(g, f, 2); };
    auto ns = [&] { return random_nonsquare(g, f, 2); };
    switch (tag) {
        case FamilyTag::I: return make_params(tag, any(), any(), ns(), any());
        case FamilyTag::II: return make_params(tag, ns(), nz(), any(), any());
        case FamilyTag::III: return make_params(tag, ns(), nz(), nz(), any());
        case FamilyTag::IV: return make_params(tag, any(), ns(), any(), ScalarK(f));
        case FamilyTag::V: return make_params(tag, ns(), ns(), any(), nz());
    }
    return {};
}

const FamilyTag kAll[] = {FamilyTag::I, FamilyTag::II, FamilyTag::III, FamilyTag::IV, FamilyTag::V};
}  // namespace

TEST_CASE("build_family examples") {
    Field f = F2();
    auto m = build_family(make_params(FamilyTag::III, f, "t", "1", "1", "0"));
    CHECK(m.form == parse_form("y^4 + y^2*z^2 + x*z^3 + t*x^2*y^2 + t*x^3*z + t*x^4", f));
    auto m4 = build_family(make_params(FamilyTag::IV, f, "0", "t", "0"));
    CHECK(m4.form == parse_form("y^4 + x*z^3 + t*x^3*z", f));
    CHECK_THROWS_AS(build_family(make_params(FamilyTag::I, f, "0", "0", "t^2")), ConstraintViolation);
    try {
        build_family(make_params(FamilyTag::I, f, "0", "0", "t^2"));
    } catch (const ConstraintViolation& e) {
        CHECK(std::string(e.what()) == "c in K^2 for family I");
    }
    CHECK_THROWS_AS(build_family(make_params(FamilyTag::III, f, "t", "1", "0", "0")), ConstraintViolation);
    CHECK_THROWS_AS(build_family(make_params(FamilyTag::V, f, "t", "t", "1", "0")), ConstraintViolation);
    CHECK_THROWS_AS(build_family(make_params(FamilyTag::II, f, "t", "0", "1", "0")), ConstraintViolation);
    // IV has no d slot
    CHECK(make_params(FamilyTag::IV, f, "0", "t", "0", "t").d.is_zero());
}

TEST_CASE("singular points") {
    Field f = F2();
    ScalarK t = ScalarK::t(f);
    auto p4 = singular_point(build_family(make_params(FamilyTag::IV, f, "0", "t", "0"))).coords;
    CHECK(p4[0] == InsepElem(ScalarK(f, 1)));
    CHECK(p4[1].is_zero());
    CHECK(p4[2] == square_root(t));

    auto p3 = singular_point(build_family(make_params(FamilyTag::III, f, "t", "1", "1", "0"))).coords;
    CHECK(p3[1] == InsepElem::s(f));
    CHECK(p3[2] == square_root(t));

    auto p2 = singular_point(build_family(make_params(FamilyTag::II, f, "t", "1", "0", "0"))).coords;
    CHECK(p2[0].is_zero());
    CHECK(p2[1] == fourth_root(t));
    CHECK(p2[2] == InsepElem(ScalarK(f, 1)));

    auto p1 = singular_point(build_family(make_params(FamilyTag::I, f, "1", "t", "t"))).coords;
    CHECK(p1[0] == InsepElem(ScalarK(f, 1)));
    CHECK(p1[1] == fourth_root(t));
    CHECK(p1[2].is_zero());
}

TEST_CASE("random valid models: shape, strangeness, singular point") {
    std::mt19937_64 g(5);
    for (int m : {1, 2})
        for (FamilyTag tag : kAll)
            for (int k = 0; k < 25; ++k) {
                auto p = random_valid(g, tag, default_field(m));
                auto mod = build_family(p);
                CHECK(mod.form.is_homogeneous());
                CHECK(mod.form.total_degree() == 4);
                CHECK(is_strange(mod.form));
                CHECK_NOTHROW(singular_point(mod));
            }
}

TEST_CASE("residue profiles") {
    Field f = F2();
    auto r4 = residue_profile(build_family(make_params(FamilyTag::IV, f, "0", "t", "0")));
    CHECK(r4.deg_p == 2);
    CHECK(r4.deg_p1 == 2);
    CHECK(r4.deg_p2 == 2);
    CHECK(r4.deg_p3 == 1);
    CHECK(r4.e1 == 2);
    CHECK(r4.e == 2);

    auto r3 = residue_profile(build_family(make_params(FamilyTag::III, f, "t", "1", "1", "0")));
    CHECK(r3.deg_p == 4);
    CHECK(r3.deg_p1 == 2);
    CHECK(r3.deg_p2 == 1);
    CHECK(!r3.deg_p3);
    CHECK(r3.e == 1);
    CHECK(r3.e1 == 1);

    CHECK_THROWS_AS(residue_profile(build_family(make_params(FamilyTag::I, f, "0", "0", "t"))), UnsupportedFamily);

    std::mt19937_64 g(9);
    for (FamilyTag tag : {FamilyTag::IV, FamilyTag::V})
        for (int k = 0; k < 40; ++k) {
            auto r = residue_profile(build_family(random_valid(g, tag, f)));
            CHECK(4 % r.deg_p1 == 0);
            CHECK(8 % r.deg_p == 0);
            CHECK(r.deg_p1 * r.e1 == 4);
            CHECK(r.deg_p * r.e * r.e1 == 8);
        }
}

TEST_CASE("invariants") {
    Field f = F2();
    CHECK(*invariant(make_params(FamilyTag::III, f, "t", "1", "1", "0")) == K("1"));
    CHECK(*invariant(make_params(FamilyTag::V, f, "t", "t", "1", "1")) == K("t^3"));
    CHECK(!invariant(make_params(FamilyTag::IV, f, "0", "t", "0")));
    CHECK(*invariant(make_params(FamilyTag::II, f, "t", "1", "1", "0")) == K("t"));
}

TEST_CASE("bc^3 = 1 iff b = c^-3") {
    std::mt19937_64 g(13);
    for (int m : {1, 2}) {
        Field f = default_field(m);
        for (int k = 0; k < 200; ++k) {
            ScalarK c = random_nonzero(g, f, 2);
            ScalarK b = k % 3 == 0 ? c.pow(-3) : random_nonzero(g, f, 2);
            auto p = make_params(FamilyTag::III, ScalarK::t(f), b, c, ScalarK(f));
            CHECK((*invariant(p) == ScalarK(f, 1)) == (b == c.pow(-3)));
        }
    }
}

TEST_CASE("classify_by_table") {
    CHECK(classify_by_table(true, true, true) == FamilyTag::I);
    CHECK(classify_by_table(false, false, true) == FamilyTag::IV);
    CHECK_THROWS_AS(classify_by_table(true, false, true), NoSuchRow);
    std::set<FamilyTag> seen;
    int valid = 0;
    for (int key = 0; key < 8; ++key) {
        try {
            seen.insert(classify_by_table(key & 4, key & 2, key & 1));
            ++valid;
        } catch (const NoSuchRow&) {
        }
    }
    CHECK(valid == 5);
    CHECK(seen.size() == 5);
}

TEST_CASE("is_strange") {
    Field f = F2();
    CHECK(!is_strange(parse_form("x^4 + y^3*z + y*z^3", f)));
    CHECK(is_strange(parse_form("y^4", f)));
    CHECK_THROWS_AS(is_strange(parse_form("y^4 + x", f)), NotHomogeneous);
}

TEST_CASE("tag names round-trip") {
    for (FamilyTag t : kAll) CHECK(parse_tag(tag_name(t)) == t);
    CHECK_THROWS_AS(parse_tag("VI"), UsageError);
}
