#include "rq/isomorphisms.hpp"

#include "rq/errors.hpp"
#include "rq/parse.hpp"

namespace rq {

namespace {

void require_iso_tag(FamilyTag t) {
    if (t != FamilyTag::III && t != FamilyTag::IV && t != FamilyTag::V)
        throw UnsupportedFamily("no isomorphism formulas for family " + tag_name(t));
}

std::array<int, 4> slots(FamilyTag t) {
    if (t == FamilyTag::IV) return {1, 2, 4, 5};
    return {2, 3, 4, 5};
}

// The constant of the source that plays the role of a in III and of b in IV, V.
const ScalarK& base_param(const FamilyParams& p) { return p.tag == FamilyTag::III ? p.a : p.b; }

}  // namespace

IsoWitness make_witness(FamilyTag tag, const std::array<ScalarK, 4>& v) {
    require_iso_tag(tag);
    Field f = v[0].field();
    IsoWitness w{tag, {}};
    for (auto& m : w.mu) m = ScalarK(f);
    auto s = slots(tag);
    for (int i = 0; i < 4; ++i) w.mu[s[i]] = v[i];
    return w;
}

IsoWitness make_witness(FamilyTag tag, Field f, const std::array<std::string, 4>& v) {
    return make_witness(tag, {parse_element(v[0], f), parse_element(v[1], f), parse_element(v[2], f),
                              parse_element(v[3], f)});
}

std::array<ScalarK, 4> witness_values(const IsoWitness& w) {
    auto s = slots(w.tag);
    return {w.mu[s[0]], w.mu[s[1]], w.mu[s[2]], w.mu[s[3]]};
}

IsoWitness identity_witness(FamilyTag tag, Field f) {
    ScalarK z(f);
    return make_witness(tag, {z, z, ScalarK(f, 1), z});
}

ScalarK iso_epsilon(const IsoWitness& w, const FamilyParams& src) {
    const auto& mu = w.mu;
    return mu[4] * mu[4] + mu[5] * mu[5] * base_param(src);
}

ScalarK iso_gamma(const IsoWitness& w, const FamilyParams& src) {
    const auto& mu = w.mu;
    ScalarK e = iso_epsilon(w, src);
    if (e.is_zero()) throw EpsilonZero("epsilon = mu4^2 + mu5^2 " + std::string(src.tag == FamilyTag::III ? "a" : "b") +
                                       " vanishes");
    int lo = w.tag == FamilyTag::IV ? 1 : 2;
    return (mu[lo] * mu[lo] + mu[lo + 1] * mu[lo + 1] * base_param(src)) / e;
}

QuarticModel apply_iso(const QuarticModel& m, const IsoWitness& w) {
    const FamilyParams& p = m.params;
    if (p.tag != w.tag) throw UsageError("witness tag " + tag_name(w.tag) + " does not match model " + tag_name(p.tag));
    require_iso_tag(p.tag);
    const auto& mu = w.mu;
    Field f = p.a.field();
    ScalarK e = iso_epsilon(w, p);
    ScalarK g = iso_gamma(w, p);
    ScalarK g2 = g * g, e2 = e * e;
    const ScalarK &a = p.a, &b = p.b, &c = p.c, &d = p.d;
    FamilyParams t{p.tag, ScalarK(f), ScalarK(f), ScalarK(f), ScalarK(f)};
    switch (p.tag) {
        case FamilyTag::III: {
            ScalarK k = mu[4] * mu[5] + mu[3] * mu[3];
            t.a = (a + g2) / e.pow(6);
            t.b = b / e.pow(3);
            t.c = e * c;
            t.d = e * k * k * b + e2 * k + e2 * (mu[5] * mu[5] * b * b * c.pow(3) + e * d);
            break;
        }
        case FamilyTag::IV: {
            ScalarK m45 = e * mu[4] * mu[5] + mu[2].pow(4), cab = c + a * b * b, m54 = mu[5].pow(4);
            t.a = e2 * a + e * mu[4] * mu[5] + mu[2].pow(4) + m54 * cab;
            t.b = b / e.pow(4);
            t.c = (c + g2 + m45 * b * b / e2 + m54 * cab * b * b / e2) / e.pow(6);
            break;
        }
        default: {
            // c' uses (k + e d) k in place of the printed (1 + e d) k; see the
            // property tests, the printed term does not make the maps isomorphisms.
            ScalarK k = mu[3] * mu[3] + mu[4] * mu[5], bg = (b + g2) * (b + g2);
            t.a = e2 * a * b * b / bg;
            t.b = (b + g2) / e2;
            t.d = e * d;
            t.c = e2 * (c + a) + (k + e * d) * k + a * b * b * (mu[5].pow(4) + e2 / bg);
            break;
        }
    }
    return build_family(t);
}

IsoMaps iso_maps(const IsoWitness& w, const FamilyParams& src) {
    require_iso_tag(src.tag);
    const auto& mu = w.mu;
    Field f = src.a.field();
    ScalarK e = iso_epsilon(w, src);
    ScalarK g = iso_gamma(w, src);
    auto K = [](const ScalarK& c) { return TriForm::constant(c); };
    TriForm y = TriForm::var(f, Y), z = TriForm::var(f, Z);
    TriForm D = K(mu[4]) + K(mu[5]) * z;
    TriForm L = K(mu[5] * base_param(src)) + K(mu[4]) * z;  // mu5 a + mu4 z, or with b
    IsoMaps m;
    m.den = D;
    switch (src.tag) {
        case FamilyTag::III:
            m.z_num = K(g) * D + L;
            m.z_scale = e.pow(3);
            m.y_num = K(mu[2]) * D + K(mu[3]) * L + K(e) * y;
            m.y_scale = e * e;
            break;
        case FamilyTag::IV:
            m.z_num = L;
            m.z_scale = e * e;
            m.y_num = K(mu[1]) * D + K(mu[2]) * L + K(e) * y;
            m.y_scale = e * e;
            break;
        default:
            m.z_num = K(g) * D + L;
            m.z_scale = e;
            m.y_num = K(mu[2]) * D + K(mu[3]) * L + K(e) * y;
            m.y_scale = e;
            break;
    }
    return m;
}

namespace {

std::string ratio_text(const TriForm& num, const ScalarK& scale, const TriForm& den) {
    if (den.is_constant()) return form_to_string(num.scale((scale * den.constant_term()).inv()));
    std::string s = scale.is_one() ? "" : "(" + scale.to_string() + ")*";
    return "(" + form_to_string(num) + ")/(" + s + "(" + form_to_string(den) + "))";
}

}  // namespace

bool IsoMaps::is_identity() const {
    Field f = den.field();
    TriForm y = TriForm::var(f, Y), z = TriForm::var(f, Z);
    return z_num == (den * z).scale(z_scale) && y_num == (den * y).scale(y_scale);
}

std::string IsoMaps::z_text() const { return ratio_text(z_num, z_scale, den); }
std::string IsoMaps::y_text() const { return ratio_text(y_num, y_scale, den); }

IsoCheck verify_iso(const QuarticModel& source, const QuarticModel& target, const IsoWitness& w) {
    if (source.params.tag != target.params.tag || source.params.tag != w.tag)
        throw UsageError("verify_iso needs source, target and witness of one family");
    IsoMaps m = iso_maps(w, source.params);
    Field f = source.form.field();
    TriForm tgt = affine_chart(target.form), src = affine_chart(source.form);
    ScalarK zi = m.z_scale.inv(), yi = m.y_scale.inv();
    // target(y', z') (mu4 + mu5 z)^4
    TriForm cleared(f);
    for (auto& [e, c] : tgt.terms()) {
        int j = e[Y], k = e[Z];
        cleared += (m.y_num.pow(j) * m.z_num.pow(k) * m.den.pow(4 - j - k)).scale(c * yi.pow(j) * zi.pow(k));
    }
    if (cleared.is_zero() || src.is_zero()) throw SubstitutionMismatch("substituted target vanishes");
    ScalarK lambda = cleared.lead_coeff() / src.lead_coeff();
    TriForm residual = cleared - src.scale(lambda);
    if (!residual.is_zero()) throw SubstitutionMismatch("residual " + form_to_string(residual));
    return {true, lambda};
}

IsoWitness random_witness(std::mt19937_64& g, const FamilyParams& src) {
    require_iso_tag(src.tag);
    Field f = src.a.field();
    for (;;) {
        std::array<ScalarK, 4> v;
        for (auto& x : v) x = random_scalar(g, f, 2);
        IsoWitness w = make_witness(src.tag, v);
        if (!iso_epsilon(w, src).is_zero()) return w;
    }
}

std::vector<AutViolation> search_automorphisms(const QuarticModel& m, uint64_t seed, int n) {
    require_iso_tag(m.params.tag);
    auto g = make_rng(seed, "automorphisms");
    std::vector<AutViolation> out;
    for (int i = 0; i < n; ++i) {
        IsoWitness w = random_witness(g, m.params);
        QuarticModel t;
        try {
            t = apply_iso(m, w);
        } catch (const ConstraintViolation&) {
            out.push_back({w, "target fails the family constraints"});
            continue;
        }
        if (!(t.params == m.params)) continue;
        if (!iso_maps(w, m.params).is_identity()) out.push_back({w, "fixes the model but is not the identity"});
    }
    return out;
}

}  // namespace rq
