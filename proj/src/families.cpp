#include "rq/families.hpp"

#include "rq/errors.hpp"
#include "rq/parse.hpp"

namespace rq {

std::string tag_name(FamilyTag t) {
    static const char* names[] = {"I", "II", "III", "IV", "V"};
    return names[int(t)];
}

FamilyTag parse_tag(const std::string& s) {
    for (FamilyTag t : {FamilyTag::I, FamilyTag::II, FamilyTag::III, FamilyTag::IV, FamilyTag::V})
        if (tag_name(t) == s) return t;
    throw UsageError("unknown family tag '" + s + "'");
}

FamilyParams make_params(FamilyTag tag, const ScalarK& a, const ScalarK& b, const ScalarK& c,
                         const ScalarK& d) {
    FamilyParams p{tag, a, b, c, d};
    if (tag == FamilyTag::IV) p.d = ScalarK(a.field());
    if (tag == FamilyTag::I) p.d = ScalarK(a.field());
    return p;
}

FamilyParams make_params(FamilyTag tag, Field f, const std::string& a, const std::string& b,
                         const std::string& c, const std::string& d) {
    return make_params(tag, parse_element(a, f), parse_element(b, f), parse_element(c, f), parse_element(d, f));
}

void check_family_constraints(const FamilyParams& p) {
    auto need = [&](bool ok, const std::string& what) {
        if (!ok) throw ConstraintViolation(what + " for family " + tag_name(p.tag));
    };
    switch (p.tag) {
        case FamilyTag::I:
            need(!is_square(p.c), "c in K^2");
            break;
        case FamilyTag::II:
            need(!is_square(p.a), "a in K^2");
            need(!p.b.is_zero(), "b = 0");
            break;
        case FamilyTag::III:
            need(!is_square(p.a), "a in K^2");
            need(!p.b.is_zero(), "b = 0");
            need(!p.c.is_zero(), "c = 0");
            break;
        case FamilyTag::IV:
            need(!is_square(p.b), "b in K^2");
            break;
        case FamilyTag::V:
            need(!is_square(p.a), "a in K^2");
            need(!is_square(p.b), "b in K^2");
            need(!p.d.is_zero(), "d = 0");
            break;
    }
}

QuarticModel build_family(const FamilyParams& p) {
    check_family_constraints(p);
    return {p, family_form(p.tag, p.a, p.b, p.c, p.d)};
}

TriForm affine_chart(const TriForm& f) {
    TriForm r(f.field());
    for (auto& [e, c] : f.terms()) r.add_term({0, e[1], e[2]}, c);
    return r;
}

namespace {

bool vanishes(const TriForm& f, const std::array<InsepElem, 3>& p) { return eval_insep(f, p).is_zero(); }

// F_y vanishes identically. If F_x or F_z is a single monomial in one
// variable, that variable is zero at every singular point; F then restricts
// to alpha y^4 + beta w^4 on the remaining line.
std::array<InsepElem, 3> sparse_singular_point(const TriForm& F) {
    Field f = F.field();
    InsepElem zero{ScalarK(f)}, one{ScalarK(f, 1)};
    int forced = -1;
    for (Var v : {X, Z}) {
        TriForm d = F.derivative(v);
        if (d.size() != 1) continue;
        auto& e = d.lead_exp();
        int nz = 0, which = -1;
        for (int i = 0; i < 3; ++i)
            if (e[i]) ++nz, which = i;
        if (nz == 1 && which != Y) {
            forced = which;
            break;
        }
    }
    if (forced < 0) throw InternalCheckFailed("no monomial partial to solve the singular locus");
    int w = forced == X ? Z : X;
    ScalarK alpha(f), beta(f);
    for (auto& [e, c] : F.terms()) {
        if (e[forced]) continue;
        if (e[Y] == 4)
            alpha += c;
        else if (e[w] == 4)
            beta += c;
        else
            throw InternalCheckFailed("unexpected term on the restricted line");
    }
    if (alpha.is_zero()) throw InternalCheckFailed("degenerate restriction");
    std::array<InsepElem, 3> p{zero, fourth_root(beta / alpha), zero};
    p[w] = one;
    return p;
}

}  // namespace

SingularPointSpec singular_point(const QuarticModel& m) {
    const FamilyParams& p = m.params;
    Field f = p.a.field();
    InsepElem one(ScalarK(f, 1));
    std::array<InsepElem, 3> pt;
    switch (p.tag) {
        case FamilyTag::III:
            pt = {one, fourth_root(p.a), square_root(p.a)};
            break;
        case FamilyTag::IV:
            pt = {one, fourth_root(p.a * p.b * p.b + p.c), square_root(p.b)};
            break;
        case FamilyTag::V:
            pt = {one, fourth_root(p.a * p.b * p.b + p.b), square_root(p.b)};
            break;
        default:
            pt = sparse_singular_point(m.form);
    }
    for (const TriForm& g : {m.form, m.form.derivative(X), m.form.derivative(Y), m.form.derivative(Z)})
        if (!vanishes(g, pt))
            throw InternalCheckFailed("singular point of family " + tag_name(p.tag) + " fails substitution");
    return {pt};
}

ResidueProfile residue_profile(const QuarticModel& m) {
    const FamilyParams& p = m.params;
    ResidueProfile r;
    switch (p.tag) {
        case FamilyTag::III:
            r.deg_p = subalgebra_dimension({fourth_root(p.a)});
            r.deg_p1 = subalgebra_dimension({square_root(p.a)});
            r.deg_p2 = 1;
            r.e = r.e1 = 1;
            return r;
        case FamilyTag::IV: {
            ScalarK k = p.a * p.b * p.b + p.c;
            r.deg_p = subalgebra_dimension({square_root(p.b), fourth_root(k)});
            r.deg_p1 = subalgebra_dimension({square_root(p.b), square_root(k)});
            r.deg_p2 = subalgebra_dimension({square_root(p.b)});
            r.deg_p3 = 1;
            break;
        }
        case FamilyTag::V: {
            ScalarK k = p.a * p.b * p.b + p.b;
            r.deg_p = subalgebra_dimension({square_root(p.a), square_root(p.b), fourth_root(k)});
            r.deg_p1 = subalgebra_dimension({square_root(p.a), square_root(p.b)});
            r.deg_p2 = subalgebra_dimension({square_root(p.a)});
            r.deg_p3 = 1;
            break;
        }
        default:
            throw UnsupportedFamily("residue profile is not available for family " + tag_name(p.tag));
    }
    r.e1 = 4 / r.deg_p1;
    r.e = 8 / (r.deg_p * r.e1);
    if (r.deg_p1 * r.e1 != 4 || r.deg_p * r.e * r.e1 != 8)
        throw InternalCheckFailed("residue degrees inconsistent with ramification");
    return r;
}

std::optional<ScalarK> invariant(const FamilyParams& p) {
    Field f = p.a.field();
    switch (p.tag) {
        case FamilyTag::II:
            return p.a * p.b * p.b + p.c * p.c + ScalarK(f, 1);
        case FamilyTag::III:
            return p.b * p.c.pow(3);
        case FamilyTag::V:
            return p.a * p.b * p.b * p.d * p.d;
        default:
            return std::nullopt;
    }
}

std::optional<ScalarK> invariant(const QuarticModel& m) { return invariant(m.params); }

FamilyTag classify_by_table(bool p2_rational, bool p_canonical, bool E_equals_F2) {
    int key = (p2_rational ? 4 : 0) | (p_canonical ? 2 : 0) | (E_equals_F2 ? 1 : 0);
    switch (key) {
        case 7: return FamilyTag::I;
        case 2: return FamilyTag::II;
        case 4: return FamilyTag::III;
        case 1: return FamilyTag::IV;
        case 0: return FamilyTag::V;
    }
    throw NoSuchRow("no family with p2 rational=" + std::string(p2_rational ? "Y" : "N") +
                    ", p canonical=" + (p_canonical ? "Y" : "N") + ", E=F2=" + (E_equals_F2 ? "Y" : "N"));
}

bool is_strange(const TriForm& f) {
    if (!f.is_homogeneous()) throw NotHomogeneous("is_strange needs a homogeneous form");
    return f.derivative(Y).is_zero();
}

bool is_strange(const FormFq& f) {
    if (!f.is_homogeneous()) throw NotHomogeneous("is_strange needs a homogeneous form");
    return f.derivative(Y).is_zero();
}

}  // namespace rq
