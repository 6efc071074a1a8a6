#include <random>

#include "doctest.h"
#include "rq/errors.hpp"
#include "rq/parse.hpp"
#include "rq/resolution.hpp"

using namespace rq;

namespace {
Field F2() { return default_field(1); }
FormFq form(const char* s) { return parse_form_fq(s, F2()); }

std::vector<std::string> ids_of(const std::vector<FibreEntry>& d) {
    std::vector<std::string> out;
    for (auto& e : d) out.push_back(e.id);
    return out;
}

std::vector<std::string> range(const std::string& prefix, int a, int b) {
    std::vector<std::string> out;
    for (int i = a; i <= b; ++i) out.push_back(prefix + std::to_string(i));
    return out;
}

// Invariants every resolved pencil satisfies regardless of its shape.
void check_fibration(const ResolutionReport& r) {
    CHECK(r.generic_self_intersection == 0);
    for (auto t : {std::pair<uint64_t, uint64_t>{1, 0}, {0, 1}})
        for (int v : fibre_orthogonality(r, t.first, t.second)) CHECK(v == 0);
    // fibres are linearly equivalent, so they meet a horizontal curve equally
    for (auto& h : r.horizontal()) {
        int s[2] = {0, 0};
        for (int k = 0; k < 2; ++k)
            for (auto& e : fibre_divisor(r, k == 0, k == 1)) s[k] += e.multiplicity * r.intersection(h, e.id);
        CHECK(s[0] == s[1]);
        CHECK(s[0] >= 0);
    }
}

void check_sections(const ResolutionReport& r) {
    for (auto& h : r.horizontal()) {
        CHECK(r.intersection(h, h) == -1);
        int s = 0;
        for (auto& e : fibre_divisor(r, 1, 0)) s += e.multiplicity * r.intersection(h, e.id);
        CHECK(s == 1);
    }
    for (auto& c : r.curves)
        if (c.exceptional && (c.mult_f0 || c.mult_f1)) CHECK(c.self_int == -2);
}
}  // namespace

TEST_CASE("pencil construction") {
    auto q = quartic_pencil();
    CHECK(q.curves.size() == 3);
    CHECK_THROWS_AS(make_pencil(form("x^4"), form("x^3"), {}), DegreeMismatch);
    CHECK_THROWS_AS(make_pencil(form("x*y^3"), form("x*z^3"), {}), ZeroDivisor);
    CHECK_NOTHROW(make_pencil(form("x^2 + y*z"), form("y^2"), {}));

    auto bp = base_points(q);
    REQUIRE(bp.size() == 2);
    CHECK(bp[0] == make_point(F2(), {1, 0, 0}));
    CHECK(bp[1] == make_point(F2(), {0, 0, 1}));
    auto bc = base_points(cubic_pencil());
    REQUIRE(bc.size() == 2);
    CHECK(bc[1] == make_point(F2(), {0, 1, 0}));
}

TEST_CASE("quartic pencil resolution") {
    auto r = resolve_pencil(quartic_pencil());
    CHECK(r.counts == std::vector<int>{4, 12});
    CHECK(r.blowups.size() == 16);
    check_fibration(r);
    check_sections(r);

    CHECK(fibre_divisor(r, 1, 0) == std::vector<FibreEntry>{{"W", 1}, {"E1", 2}, {"E2", 2}, {"E3", 1}});
    std::vector<int> fm{2, 4, 6, 8, 7, 6, 5, 4, 3, 2, 1};
    std::vector<FibreEntry> d1{{"X", 3}, {"Z", 1}};
    for (int i = 0; i < 11; ++i) d1.push_back({"F" + std::to_string(i + 1), fm[i]});
    CHECK(fibre_divisor(r, 0, 1) == d1);
    CHECK(fibre_divisor(r, 1, 1).size() == 1);
    CHECK_THROWS_AS(fibre_divisor(r, 0, 0), UsageError);

    auto M = intersection_matrix(r, {"W", "E1", "E2", "E3"});
    CHECK(M == std::vector<std::vector<int>>{{-6, 2, 1, 0}, {2, -2, 1, 0}, {1, 1, -2, 1}, {0, 0, 1, -2}});
    CHECK(r.intersection("E4", "E4") == -1);
    CHECK(r.intersection("F12", "F12") == -1);
    CHECK(r.intersection("X", "X") == -3);
    CHECK(r.intersection("Z", "Z") == -3);
    CHECK(r.intersection("W", "F12") == 1);
    CHECK(r.intersection("Z", "E4") == 1);
    CHECK(r.horizontal() == std::vector<std::string>{"E4", "F12"});

    CHECK(dynkin_type(r, {"E1", "E2", "E3"}) == "A3");
    CHECK(dynkin_type(r, range("F", 1, 11)) == "A11");
    CHECK(dynkin_type(r, {"W", "E1"}) == "Unrecognized");
    CHECK_THROWS_AS(r.find("Q"), UnknownCurve);

    // W touches E1 at a single point with contact order 2
    CHECK(r.meeting_point_count(r.find("W"), r.find("E1")) == 1);
    CHECK(r.meeting_point_count(r.find("X"), r.find("Z")) == 1);
}

TEST_CASE("cubic pencil resolution") {
    auto r = resolve_pencil(cubic_pencil());
    CHECK(r.counts == std::vector<int>{2, 7});
    check_fibration(r);
    check_sections(r);
    auto d1 = fibre_divisor(r, 0, 1);
    std::vector<int> mult;
    for (auto& e : d1) mult.push_back(e.multiplicity);
    CHECK(mult == std::vector<int>{2, 1, 2, 3, 4, 3, 2, 1});
    CHECK(dynkin_type(r, ids_of(d1)) == "~E7");
    auto d0 = fibre_divisor(r, 1, 0);
    CHECK(d0 == std::vector<FibreEntry>{{"W'", 1}, {"E'1", 1}});
    CHECK(dynkin_type(r, ids_of(d0)) == "~A1*");
    CHECK(r.intersection("W'", "E'1") == 2);
}

TEST_CASE("Dynkin labels on small configurations") {
    // Every sub-chain of the A11 fibre is again of type A.
    auto r = resolve_pencil(quartic_pencil());
    for (int a = 1; a <= 11; ++a)
        for (int b = a; b <= 11; ++b) CHECK(dynkin_type(r, range("F", a, b)) == "A" + std::to_string(b - a + 1));
    CHECK(dynkin_type(r, {"F1", "F3"}) == "Unrecognized");
    auto c = resolve_pencil(cubic_pencil());
    // the ~E7 fibre minus its multiplicity-1 end is E7
    CHECK(dynkin_type(c, {"X'", "F'1", "F'2", "F'3", "F'4", "F'5", "F'6"}) == "E7");
    CHECK(dynkin_type(c, {"X'", "F'2", "F'3", "F'4"}) == "D4");
}

TEST_CASE("random pencils satisfy the fibration invariants") {
    std::mt19937_64 g(7);
    const char* mons3[] = {"x^3", "y^3", "z^3", "x^2*y", "x^2*z", "x*y^2", "y^2*z", "x*z^2", "y*z^2", "x*y*z"};
    int resolved = 0, rejected = 0;
    for (int trial = 0; trial < 300; ++trial) {
        FormFq f[2] = {FormFq(F2()), FormFq(F2())};
        for (auto& h : f)
            for (auto* m : mons3)
                if (g() & 1) h = h + form(m);
        try {
            // the special members themselves stand in for their plane components
            auto p = make_pencil(f[0], f[1], {{"A", f[0]}, {"B", f[1]}});
            auto r = resolve_pencil(p);
            check_fibration(r);
            ++resolved;
        } catch (const NonRationalCenter&) {
            ++rejected;
        } catch (const ZeroDivisor&) {
        } catch (const ZeroForm&) {
        }
    }
    CHECK(resolved >= 20);
    CHECK(rejected > 0);
}

TEST_CASE("covering map between the pencils") {
    auto rep = covering_check();
    CHECK(rep.common_factor == form("x^2"));
    REQUIRE(rep.curves.size() == 3);
    for (auto& ci : rep.curves) {
        CHECK(ci.on_target);
        CHECK(ci.degree == 2);
        CHECK(ci.inseparable);
    }
    CHECK(rep.curves[0].target == "Z'");
    CHECK(rep.curves[1].target == "W'");
    CHECK(rep.curves[2].source == "X");
    CHECK(rep.curves[2].target == "F'2");

    CHECK_THROWS_AS(covering_check({form("x"), form("y"), form("z")}), IdentityFailed);
    CHECK_THROWS_AS(covering_check({form("x^2"), form("y^2"), form("y*z")}), IdentityFailed);
}
