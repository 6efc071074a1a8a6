#pragma once

#include <array>
#include <optional>
#include <string>

#include "rq/insep.hpp"
#include "rq/poly.hpp"

namespace rq {

enum class FamilyTag { I, II, III, IV, V };

std::string tag_name(FamilyTag t);
FamilyTag parse_tag(const std::string& s);

// Unused slots are zero (IV has no d).
struct FamilyParams {
    FamilyTag tag;
    ScalarK a, b, c, d;
    bool operator==(const FamilyParams& o) const {
        return tag == o.tag && a == o.a && b == o.b && c == o.c && d == o.d;
    }
};

FamilyParams make_params(FamilyTag tag, const ScalarK& a, const ScalarK& b, const ScalarK& c,
                         const ScalarK& d);
FamilyParams make_params(FamilyTag tag, Field f, const std::string& a, const std::string& b,
                         const std::string& c, const std::string& d = "0");

struct QuarticModel {
    FamilyParams params;
    TriForm form;
};

// Homogeneous quartic of the given family for arbitrary coefficients
// (no validation); shared by the K-models and the finite-field fibrations.
template <class R>
Poly<R, 3> family_form(FamilyTag tag, const R& a, const R& b, const R& c, const R& d) {
    Field f = a.field();
    using P = Poly<R, 3>;
    P r(f);
    auto add = [&](const R& k, int i, int j, int l) { r.add_term({i, j, l}, k); };
    R one(f, 1);
    switch (tag) {
        case FamilyTag::I:  // y^4 + a z^4 + x z^3 + b x^2 z^2 + c x^4
            add(one, 0, 4, 0), add(a, 0, 0, 4), add(one, 1, 0, 3), add(b, 2, 0, 2), add(c, 4, 0, 0);
            break;
        case FamilyTag::II:  // y^4 + a z^4 + b x^2 y^2 + c x^2 z^2 + b x^3 z + d x^4
            add(one, 0, 4, 0), add(a, 0, 0, 4), add(b, 2, 2, 0), add(c, 2, 0, 2), add(b, 3, 0, 1),
                add(d, 4, 0, 0);
            break;
        case FamilyTag::III: {
            R c3 = c * c * c, b2 = b * b;
            add(b, 0, 4, 0), add(d, 0, 0, 4), add(one, 0, 2, 2), add(one, 1, 0, 3), add(b + b2 * c3, 2, 0, 2),
                add(a, 2, 2, 0), add(a, 3, 0, 1), add(a * b2 * c3 + a * a * d, 4, 0, 0);
            break;
        }
        case FamilyTag::IV:  // y^4 + a z^4 + x z^3 + b x^3 z + c x^4
            add(one, 0, 4, 0), add(a, 0, 0, 4), add(one, 1, 0, 3), add(b, 3, 0, 1), add(c, 4, 0, 0);
            break;
        case FamilyTag::V:  // y^4 + d z^2 y^2 + (c+a) z^4 + d x z^3 + bd x^2 y^2 + x^2 z^2 + bd x^3 z + b^2 c x^4
            add(one, 0, 4, 0), add(d, 0, 2, 2), add(c + a, 0, 0, 4), add(d, 1, 0, 3), add(b * d, 2, 2, 0),
                add(one, 2, 0, 2), add(b * d, 3, 0, 1), add(b * b * c, 4, 0, 0);
            break;
    }
    return r;
}

// Validates the parameter constraints and emits the quartic.
QuarticModel build_family(const FamilyParams& p);
// Throws ConstraintViolation naming the first failed condition.
void check_family_constraints(const FamilyParams& p);

// The chart x = 1 of the form (x exponents dropped).
TriForm affine_chart(const TriForm& f);

struct SingularPointSpec {
    std::array<InsepElem, 3> coords;
};
SingularPointSpec singular_point(const QuarticModel& m);

struct ResidueProfile {
    int deg_p = 0, deg_p1 = 0, deg_p2 = 0;
    std::optional<int> deg_p3;
    int e = 1, e1 = 1;
};
ResidueProfile residue_profile(const QuarticModel& m);

std::optional<ScalarK> invariant(const QuarticModel& m);
std::optional<ScalarK> invariant(const FamilyParams& p);

FamilyTag classify_by_table(bool p2_rational, bool p_canonical, bool E_equals_F2);

bool is_strange(const TriForm& f);
bool is_strange(const FormFq& f);

}  // namespace rq
