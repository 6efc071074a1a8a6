#include "rq/fibres.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "rq/errors.hpp"
#include "rq/families.hpp"
#include "rq/parse.hpp"

namespace rq {

std::string fibration_name(Fibration fb) {
    static const char* names[] = {"pi3", "pi4", "pi5", "pencil", "cubic-pencil"};
    return names[int(fb)];
}

Fibration parse_fibration(const std::string& s) {
    for (Fibration fb : {Fibration::Pi3, Fibration::Pi4, Fibration::Pi5, Fibration::QuarticPencil,
                         Fibration::CubicPencil})
        if (fibration_name(fb) == s) return fb;
    throw UsageError("unknown fibration '" + s + "'");
}

int fibration_arity(Fibration fb) {
    switch (fb) {
        case Fibration::Pi3:
        case Fibration::Pi5:
            return 4;
        case Fibration::Pi4:
            return 3;
        default:
            return 2;
    }
}

PlaneCurveFq make_curve(const FormFq& f) {
    if (f.is_zero()) throw ZeroForm("the curve form vanishes identically");
    if (!f.is_homogeneous()) throw NotHomogeneous("plane curve form is not homogeneous");
    int d = f.total_degree();
    if (d != 3 && d != 4) throw DegreeMismatch("plane curve of degree " + std::to_string(d) + ", expected 3 or 4");
    return {f};
}

PlaneCurveFq specialize_fibre(Fibration fb, const std::vector<uint64_t>& params, Field f) {
    if (int(params.size()) != fibration_arity(fb))
        throw UsageError(fibration_name(fb) + " takes " + std::to_string(fibration_arity(fb)) + " parameters, got " +
                         std::to_string(params.size()));
    for (uint64_t v : params)
        if (v >= f->size()) throw UsageError("parameter outside the field");
    auto E = [&](size_t i) { return Fq(f, params[i]); };
    Fq zero(f, 0);
    FormFq F(f);
    auto mono = [&](const Fq& k, int i, int j, int l) { return FormFq::monomial(k, {i, j, l}); };
    switch (fb) {
        case Fibration::Pi3:
            F = family_form<Fq>(FamilyTag::III, E(0), E(1), E(2), E(3));
            break;
        case Fibration::Pi4:
            F = family_form<Fq>(FamilyTag::IV, E(0), E(1), E(2), zero);
            break;
        case Fibration::Pi5:
            F = family_form<Fq>(FamilyTag::V, E(0), E(1), E(2), E(3));
            break;
        case Fibration::QuarticPencil:  // t0 (y^4 + x z^3) + t1 x^3 z
            if (E(0).is_zero() && E(1).is_zero()) throw ZeroForm("pencil member (0:0)");
            F = mono(E(0), 0, 4, 0) + mono(E(0), 1, 0, 3) + mono(E(1), 3, 0, 1);
            break;
        case Fibration::CubicPencil:  // t0 (u v^2 + w^3) + t1 u^2 w with (u, v, w) = (x, y, z)
            if (E(0).is_zero() && E(1).is_zero()) throw ZeroForm("pencil member (0:0)");
            F = mono(E(0), 1, 2, 0) + mono(E(0), 0, 0, 3) + mono(E(1), 2, 0, 1);
            break;
    }
    if (F.is_zero()) throw ZeroForm(fibration_name(fb) + " fibre vanishes identically");
    return make_curve(F);
}

ProjPoint make_point(Field f, std::array<uint64_t, 3> c, int ext) {
    int i = 0;
    while (i < 3 && c[i] == 0) ++i;
    if (i == 3) throw UsageError("(0:0:0) is not a point");
    uint64_t s = f->inv(c[i]);
    for (auto& v : c) v = f->mul(v, s);
    return {f, c, ext};
}

std::string ProjPoint::to_string() const {
    return "(" + field->to_string(c[0]) + ":" + field->to_string(c[1]) + ":" + field->to_string(c[2]) + ")";
}

namespace {

// The form with coefficients carried into `to`, which must contain its field.
FormFq lift(const FormFq& F, Field to) {
    Field from = F.field();
    if (from == to) return F;
    int r = to->degree() / from->degree();
    Extension x = extend(from, r);
    if (x.big == to) return embed_form(F, x.emb);
    return embed_form(F, Embedding(from, to));
}

Field extension_field(Field f, int r) { return r == 1 ? f : extend(f, r).big; }

// Dense evaluator for a form at many points.
struct Compiled {
    Field F;
    int deg = 0;
    std::vector<std::array<int, 3>> e;
    std::vector<uint64_t> c;

    explicit Compiled(const FormFq& f) : F(f.field()) {
        for (auto& [ex, k] : f.terms()) {
            e.push_back(ex);
            c.push_back(k.v);
            deg = std::max(deg, ex[0] + ex[1] + ex[2]);
        }
    }
    uint64_t operator()(const std::array<std::array<uint64_t, 5>, 3>& pw) const {
        uint64_t acc = 0;
        for (size_t i = 0; i < e.size(); ++i)
            acc ^= F->mul(c[i], F->mul(pw[0][e[i][0]], F->mul(pw[1][e[i][1]], pw[2][e[i][2]])));
        return acc;
    }
};

void powers(Field F, uint64_t a, std::array<uint64_t, 5>& out) {
    out[0] = 1;
    for (int k = 1; k < 5; ++k) out[k] = F->mul(out[k - 1], a);
}

// Calls fn on every point of P^2(E) in the order (1:y:z), (0:1:z), (0:0:1);
// fn returns false to stop.
void for_each_point(Field E, const std::function<bool(const std::array<uint64_t, 3>&,
                                                      const std::array<std::array<uint64_t, 5>, 3>&)>& fn) {
    std::array<std::array<uint64_t, 5>, 3> pw;
    uint64_t q = E->size();
    powers(E, 1, pw[0]);
    for (uint64_t y = 0; y < q; ++y) {
        powers(E, y, pw[1]);
        for (uint64_t z = 0; z < q; ++z) {
            powers(E, z, pw[2]);
            if (!fn({1, y, z}, pw)) return;
        }
    }
    powers(E, 0, pw[0]);
    powers(E, 1, pw[1]);
    for (uint64_t z = 0; z < q; ++z) {
        powers(E, z, pw[2]);
        if (!fn({0, 1, z}, pw)) return;
    }
    powers(E, 0, pw[1]);
    powers(E, 1, pw[2]);
    fn({0, 0, 1}, pw);
}

// True when every coordinate lies in the subfield of degree r' < r over the base.
bool defined_below(Field E, int base_m, int r, const std::array<uint64_t, 3>& c) {
    for (int s = 1; s < r; ++s) {
        if (r % s) continue;
        bool in = true;
        for (uint64_t v : c) in = in && E->in_subfield(v, base_m * s);
        if (in) return true;
    }
    return false;
}

std::vector<ProjPoint> singular_points_of(const FormFq& F, int max_ext) {
    if (max_ext < 1) throw UsageError("max_ext must be at least 1");
    std::vector<ProjPoint> out;
    Field f = F.field();
    for (int r = 1; r <= max_ext; ++r) {
        Field E = extension_field(f, r);
        FormFq G = lift(F, E);
        Compiled g(G), gx(G.derivative(X)), gy(G.derivative(Y)), gz(G.derivative(Z));
        for_each_point(E, [&](const std::array<uint64_t, 3>& c, const auto& pw) {
            if (g(pw) || gx(pw) || gy(pw) || gz(pw)) return true;
            if (r > 1 && defined_below(E, f->degree(), r, c)) return true;
            out.push_back({E, c, r});
            return true;
        });
    }
    return out;
}

// Points of V(F) over the extension of degree r, at most `limit` of them.
std::vector<ProjPoint> curve_points(const FormFq& F, int r, size_t limit) {
    std::vector<ProjPoint> out;
    Field E = extension_field(F.field(), r);
    Compiled g(lift(F, E));
    for_each_point(E, [&](const std::array<uint64_t, 3>& c, const auto& pw) {
        if (g(pw) == 0 && !(r > 1 && defined_below(E, F.field()->degree(), r, c))) out.push_back({E, c, r});
        return out.size() < limit;
    });
    return out;
}

using Local = Poly<Fq, 2>;

struct Chart {
    int i, j, k;  // p[i] = 1; local coordinates X = v_j/v_i - p_j, Y = v_k/v_i - p_k
    Local g;
};

Chart local_equation(const FormFq& F, const ProjPoint& p) {
    Field E = p.field;
    FormFq G = lift(F, E);
    ProjPoint q = make_point(E, p.c, p.ext);
    int i = q.c[0] ? 0 : (q.c[1] ? 1 : 2);
    int j = i == 0 ? 1 : 0, k = i == 2 ? 1 : 2;
    std::array<Local, 3> s;
    s[i] = Local::constant(E, 1);
    s[j] = Local::var(E, 0) + Local::constant(E, q.c[j]);
    s[k] = Local::var(E, 1) + Local::constant(E, q.c[k]);
    return {i, j, k, G.substitute<2>(s)};
}

// Binary form of degree m as a polynomial in T = Y/X; coefficient k is that of X^(m-k) Y^k.
UPoly dehomogenize(const Local& h, int m) {
    std::vector<uint64_t> c(m + 1, 0);
    for (auto& [e, v] : h.terms()) c[e[1]] = v.v;
    return UPoly(h.field(), c);
}

UPoly squarefree_part(const UPoly& f) {
    UPoly r = UPoly::constant(f.field(), 1);
    for (auto& [g, i] : squarefree_decomposition(f)) r *= g;
    return r;
}

Local embed_local(const Local& g, const Embedding& emb) {
    return g.map_coeffs(emb.to(), [&](const Fq& c) { return Fq(emb.to(), emb(c.v)); });
}

// g(X, X (Y + lambda)) / X^m
Local blowup_finite(const Local& g, const Fq& lambda, int m) {
    Field E = g.field();
    Local X = Local::var(E, 0), Y = Local::var(E, 1);
    Local t = g.substitute<2>({X, X * Y + X.scale(lambda)});
    Local r(E);
    for (auto& [e, c] : t.terms()) r.add_term({e[0] - m, e[1]}, c);
    return r;
}

// g(X Y, Y) / Y^m
Local blowup_infinite(const Local& g, int m) {
    Field E = g.field();
    Local X = Local::var(E, 0), Y = Local::var(E, 1);
    Local t = g.substitute<2>({X * Y, Y});
    Local r(E);
    for (auto& [e, c] : t.terms()) r.add_term({e[0], e[1] - m}, c);
    return r;
}

void blowup_walk(const Local& g, int depth, DeltaResult& r) {
    int m = g.order();
    if (m < 1) throw InternalCheckFailed("strict transform does not pass through the center");
    r.mult_sequence.push_back(m);
    if (m == 1) {
        ++r.branches;
        return;
    }
    if (depth > 64) throw InternalCheckFailed("blowup sequence does not terminate (non-reduced curve?)");
    r.delta += m * (m - 1) / 2;
    UPoly h1 = dehomogenize(g.homogeneous_part(m), m);
    bool infinite = h1.degree() < m;
    int finite = h1.degree() > 0 ? distinct_root_count(h1) : 0;
    if (finite + (infinite ? 1 : 0) > 1) r.branch_split = true;
    if (infinite) blowup_walk(blowup_infinite(g, m), depth + 1, r);
    if (finite == 0) return;
    UPoly sq = squarefree_part(h1);
    int s = splitting_degree(sq);
    Local G = g;
    if (s > 1) {
        Extension x = extend(g.field(), s);
        G = embed_local(g, x.emb);
        sq = sq.embed(x.emb);
    }
    for (uint64_t lam : roots_in_field(sq)) blowup_walk(blowup_finite(G, Fq(G.field(), lam), m), depth + 1, r);
}

std::vector<int> root_profile(const UPoly& f, int degree) {
    std::vector<int> prof;
    for (auto& [g, i] : squarefree_decomposition(f))
        for (int k = 0; k < g.degree(); ++k) prof.push_back(i);
    if (f.degree() < degree) prof.push_back(degree - f.degree());
    std::sort(prof.rbegin(), prof.rend());
    return prof;
}

bool proportional(const std::array<uint64_t, 3>& a, const std::array<uint64_t, 3>& b, Field E) {
    return (E->mul(a[0], b[1]) ^ E->mul(a[1], b[0])) == 0 && (E->mul(a[0], b[2]) ^ E->mul(a[2], b[0])) == 0 &&
           (E->mul(a[1], b[2]) ^ E->mul(a[2], b[1])) == 0;
}

// Two independent points spanning the line l0 x + l1 y + l2 z = 0.
std::pair<std::array<uint64_t, 3>, std::array<uint64_t, 3>> line_basis(const std::array<uint64_t, 3>& l) {
    int i = l[0] ? 0 : (l[1] ? 1 : 2);
    std::vector<std::array<uint64_t, 3>> v;
    for (int j = 0; j < 3; ++j) {
        if (j == i) continue;
        std::array<uint64_t, 3> q{};
        q[i] = l[j];
        q[j] = l[i];
        v.push_back(q);
    }
    return {v[0], v[1]};
}

// F restricted to the line through p and q, as a polynomial in T for p + T q.
UPoly restrict_to_line(const FormFq& G, const std::array<uint64_t, 3>& p, const std::array<uint64_t, 3>& q) {
    Field E = G.field();
    using U = Poly<Fq, 1>;
    std::array<U, 3> s;
    for (int v = 0; v < 3; ++v) s[v] = U::constant(E, p[v]) + U::var(E, 0).scale(Fq(E, q[v]));
    U r = G.substitute<1>(s);
    std::vector<uint64_t> c(5, 0);
    for (auto& [e, k] : r.terms()) c[e[0]] = k.v;
    return UPoly(E, c);
}

FormFq linear_form(Field f, const std::array<uint64_t, 3>& l) {
    FormFq L(f);
    for (int v = 0; v < 3; ++v) L.add_term({v == 0, v == 1, v == 2}, Fq(f, l[v]));
    return L;
}

bool line_is_component(const FormFq& F, const std::array<uint64_t, 3>& l) {
    auto [p, q] = line_basis(l);
    // the top coefficient in T is F(q), so this covers the whole line
    return restrict_to_line(F, p, q).is_zero();
}

}  // namespace

std::vector<ProjPoint> singular_locus(const PlaneCurveFq& c, int max_ext) {
    return singular_points_of(c.form, max_ext);
}

std::vector<ProjPoint> rational_points(const PlaneCurveFq& c) { return curve_points(c.form, 1, SIZE_MAX); }

int multiplicity_at(const PlaneCurveFq& c, const ProjPoint& p) {
    Chart ch = local_equation(c.form, p);
    if (!ch.g.constant_term().is_zero()) throw PointNotOnCurve(p.to_string() + " is not on the curve");
    return ch.g.order();
}

std::string contact_name(ContactKind k) {
    static const char* names[] = {"Hyperflex4", "Bitangent22", "Other"};
    return names[int(k)];
}

std::string TangentType::to_string() const {
    std::string s = contact_name(kind) + "(";
    for (size_t i = 0; i < profile.size(); ++i) s += (i ? "," : "") + std::to_string(profile[i]);
    return s + ")";
}

TangentType tangent_contact_type(const PlaneCurveFq& c, const ProjPoint& p) {
    if (c.degree() != 4) throw DegreeMismatch("tangent contact needs a quartic");
    if (multiplicity_at(c, p) != 1) throw NotSmoothPoint(p.to_string() + " is singular");
    Field E = p.field;
    FormFq G = lift(c.form, E);
    std::array<uint64_t, 3> grad;
    for (int v = 0; v < 3; ++v) grad[v] = eval_form(G.derivative(v), p.c);
    auto [q1, q2] = line_basis(grad);
    auto q = proportional(q1, p.c, E) ? q2 : q1;
    UPoly f = restrict_to_line(G, p.c, q);
    TangentType t;
    if (f.is_zero()) return t;  // the tangent line is a component
    t.profile = root_profile(f, 4);
    if (t.profile == std::vector<int>{4})
        t.kind = ContactKind::Hyperflex4;
    else if (t.profile == std::vector<int>{2, 2})
        t.kind = ContactKind::Bitangent22;
    return t;
}

DeltaResult delta_invariant(const PlaneCurveFq& c, const ProjPoint& p) {
    Chart ch = local_equation(c.form, p);
    if (!ch.g.constant_term().is_zero()) throw PointNotOnCurve(p.to_string() + " is not on the curve");
    if (ch.g.order() < 2) throw NotSingular(p.to_string() + " is a smooth point");
    DeltaResult r;
    blowup_walk(ch.g, 0, r);
    return r;
}

std::optional<SingularTangent> singular_tangent(const PlaneCurveFq& c, const ProjPoint& p) {
    Chart ch = local_equation(c.form, p);
    if (!ch.g.constant_term().is_zero()) throw PointNotOnCurve(p.to_string() + " is not on the curve");
    int m = ch.g.order();
    if (m < 2) throw NotSingular(p.to_string() + " is a smooth point");
    Field E = p.field;
    UPoly h1 = dehomogenize(ch.g.homogeneous_part(m), m);
    bool infinite = h1.degree() < m;
    int finite = h1.degree() > 0 ? distinct_root_count(h1) : 0;
    if (finite + (infinite ? 1 : 0) != 1) return std::nullopt;
    ProjPoint q = make_point(E, p.c, p.ext);
    SingularTangent st;
    st.cone_multiplicity = m;
    Local X = Local::var(E, 0), Y = Local::var(E, 1);
    Local on_line(E);
    if (infinite) {
        // X = 0, i.e. v_j + p_j v_i = 0
        st.line[ch.j] = 1;
        st.line[ch.i] = q.c[ch.j];
        on_line = ch.g.substitute<2>({Local(E), Y});
    } else {
        uint64_t lam = roots_in_field(squarefree_part(h1)).front();
        // Y = lam X, i.e. v_k + lam v_j + (p_k + lam p_j) v_i = 0
        st.line[ch.k] = 1;
        st.line[ch.j] = lam;
        st.line[ch.i] = q.c[ch.k] ^ E->mul(lam, q.c[ch.j]);
        on_line = ch.g.substitute<2>({X, X.scale(Fq(E, lam))});
    }
    st.intersection_multiplicity = on_line.is_zero() ? -1 : on_line.order();
    return st;
}

bool is_smooth_conic(const FormFq& q) {
    if (q.is_zero() || !q.is_homogeneous() || q.total_degree() != 2) return false;
    if (q.sqrt()) return false;
    return singular_points_of(q, 1).empty();
}

std::string fibre_kind_name(FibreKind k) {
    static const char* names[] = {"IntegralQuartic", "ConicPlusDoubleLine", "DoubleConic", "LinePlusTripleLine",
                                  "Other"};
    return names[int(k)];
}

FibreClass classify_fibre(const PlaneCurveFq& c, int tangent_samples) {
    if (c.degree() != 4) throw DegreeMismatch("fibre classification needs a quartic");
    const FormFq& F = c.form;
    Field f = c.field();
    FibreClass out;
    if (auto root = F.sqrt()) {
        out.components.push_back({*root, 2});
        out.kind = is_smooth_conic(*root) ? FibreKind::DoubleConic : FibreKind::Other;
        if (out.kind == FibreKind::Other) out.note = "square of a singular conic";
        return out;
    }

    // Rational line components, each divided out as often as it goes.
    FormFq rest = F;
    uint64_t q = f->size();
    std::vector<std::array<uint64_t, 3>> lines;
    for (uint64_t b = 0; b < q; ++b)
        for (uint64_t cc = 0; cc < q; ++cc) lines.push_back({1, b, cc});
    for (uint64_t cc = 0; cc < q; ++cc) lines.push_back({0, 1, cc});
    lines.push_back({0, 0, 1});
    for (auto& l : lines) {
        if (!line_is_component(rest, l)) continue;
        FormFq L = linear_form(f, l);
        int e = 0;
        while (auto d = rest.divide(L)) {
            rest = *d;
            ++e;
        }
        if (e == 0) throw InternalCheckFailed("line component does not divide the form");
        out.components.push_back({L, e});
        if (rest.total_degree() <= 0) break;
    }
    if (!out.components.empty()) {
        if (rest.total_degree() > 0) out.components.push_back({rest, 1});
        std::vector<int> lm;
        for (auto& comp : out.components)
            if (comp.form.total_degree() == 1) lm.push_back(comp.multiplicity);
        std::sort(lm.begin(), lm.end());
        int rd = std::max(rest.total_degree(), 0);
        if (rd == 0 && lm == std::vector<int>{1, 3})
            out.kind = FibreKind::LinePlusTripleLine;
        else if (rd == 2 && lm == std::vector<int>{2} && is_smooth_conic(rest))
            out.kind = FibreKind::ConicPlusDoubleLine;
        else
            out.note = "reducible with rational line components";
        return out;
    }

    // Integral certificate: a single singular point, unibranch with delta 3.
    out.singular_points = singular_locus(c, 2);
    if (out.singular_points.size() != 1) {
        out.note = std::to_string(out.singular_points.size()) + " singular points over extensions of degree <= 2";
        return out;
    }
    const ProjPoint& p = out.singular_points.front();
    out.delta = delta_invariant(c, p);
    if (out.delta.delta != 3 || out.delta.branches != 1) {
        out.note = "singular point with delta " + std::to_string(out.delta.delta) + " and " +
                   std::to_string(out.delta.branches) + " branches";
        return out;
    }
    out.kind = FibreKind::IntegralQuartic;
    out.components.push_back({F, 1});
    out.sing_point = p;
    out.multiplicity = multiplicity_at(c, p);
    out.sing_tangent = singular_tangent(c, p);
    std::vector<ProjPoint> smooth;
    for (int r = 1; r <= 2 && smooth.empty(); ++r)
        for (auto& pt : curve_points(F, r, size_t(tangent_samples) + 1)) {
            if (pt.field == p.field && pt.c == p.c) continue;
            if (int(smooth.size()) < tangent_samples) smooth.push_back(pt);
        }
    for (size_t i = 0; i < smooth.size(); ++i) {
        TangentType t = tangent_contact_type(c, smooth[i]);
        if (i == 0)
            out.tangent_type = t;
        else if (!(t == out.tangent_type))
            out.tangents_agree = false;
    }
    out.tangent_samples = int(smooth.size());
    return out;
}

std::optional<ProjPoint> predicted_singular_point(Fibration fb, const std::vector<uint64_t>& params, Field f) {
    if (int(params.size()) != fibration_arity(fb)) throw UsageError("wrong number of fibration parameters");
    auto root4 = [&](uint64_t a) { return f->sqrt(f->sqrt(a)); };
    auto mul = [&](uint64_t a, uint64_t b) { return f->mul(a, b); };
    switch (fb) {
        case Fibration::Pi3:
            return make_point(f, {1, root4(params[0]), f->sqrt(params[0])});
        case Fibration::Pi4: {
            uint64_t a = params[0], b = params[1], cc = params[2];
            return make_point(f, {1, root4(mul(a, mul(b, b)) ^ cc), f->sqrt(b)});
        }
        case Fibration::Pi5: {
            uint64_t a = params[0], b = params[1];
            return make_point(f, {1, root4(mul(a, mul(b, b)) ^ b), f->sqrt(b)});
        }
        case Fibration::QuarticPencil:
            if (params[0] == 0) return std::nullopt;
            return make_point(f, {1, 0, f->sqrt(f->div(params[1], params[0]))});
        default:
            return std::nullopt;
    }
}

int predicted_multiplicity(Fibration fb, const std::vector<uint64_t>& params, Field f) {
    if (int(params.size()) != fibration_arity(fb)) throw UsageError("wrong number of fibration parameters");
    auto mul = [&](uint64_t a, uint64_t b) { return f->mul(a, b); };
    switch (fb) {
        case Fibration::Pi3:  // b c^3 = 1
            return mul(params[1], f->pow(params[2], 3)) == 1 ? 3 : 2;
        case Fibration::Pi4:  // b = 0
            return params[1] == 0 ? 3 : 2;
        case Fibration::Pi5: {  // a b^2 d^2 = 1
            uint64_t bd = mul(params[1], params[3]);
            return mul(params[0], mul(bd, bd)) == 1 ? 3 : 2;
        }
        case Fibration::QuarticPencil:
            return params[1] == 0 ? 3 : 2;
        default:
            return 2;
    }
}

std::vector<uint64_t> parse_fq_list(const std::string& text, Field f) {
    std::vector<uint64_t> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        ScalarK v = parse_element(tok, f);
        if (!v.is_constant()) throw UsageError("'" + tok + "' is not an element of the finite field");
        out.push_back(v.constant_value());
    }
    return out;
}

}  // namespace rq
