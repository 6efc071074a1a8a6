#include "rq/tower.hpp"

#include <map>

#include "rq/errors.hpp"
#include "rq/parse.hpp"

namespace rq {

std::string kind_name(TowerKind k) {
    static const char* names[] = {"A", "B", "C", "D"};
    return names[int(k)];
}

TowerKind parse_kind(const std::string& s) {
    for (TowerKind k : {TowerKind::A, TowerKind::B, TowerKind::C, TowerKind::D})
        if (kind_name(k) == s) return k;
    throw UsageError("unknown presentation kind '" + s + "'");
}

const std::vector<std::string>& kind_constants(TowerKind k) {
    static const std::vector<std::string> names[] = {
        {"c0", "c1", "A2", "B0", "B1"},
        {"a2", "b0", "b2"},
        {"a0", "a2", "b1", "c3", "c4"},
        {"a0", "a2", "c0", "c2"},
    };
    return names[int(k)];
}

namespace {
int slot(TowerKind k, const std::string& name) {
    auto& names = kind_constants(k);
    for (size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return int(i);
    throw UsageError("kind " + kind_name(k) + " has no constant " + name);
}
}  // namespace

const ScalarK& TowerPresentation::get(const std::string& name) const { return values[slot(kind, name)]; }
void TowerPresentation::set(const std::string& name, const ScalarK& v) { values[slot(kind, name)] = v; }

TowerPresentation make_presentation(TowerKind k, std::vector<ScalarK> values) {
    if (values.size() != kind_constants(k).size())
        throw UsageError("kind " + kind_name(k) + " takes " + std::to_string(kind_constants(k).size()) +
                         " constants");
    return {k, std::move(values)};
}

TowerPresentation make_presentation(TowerKind k, Field f, const std::vector<std::string>& values) {
    std::vector<ScalarK> v;
    for (auto& s : values) v.push_back(parse_element(s, f));
    return make_presentation(k, std::move(v));
}

std::string Relation::to_string() const {
    static const char* names = "xwzy";
    std::string lhs(1, names[var]);
    if (power > 1) lhs += "^" + std::to_string(power);
    return lhs + " = " + poly_to_string(rhs, names);
}

namespace {

TowerPoly cst(const ScalarK& c) { return TowerPoly::constant(c); }
TowerPoly gen(Field f, int i) { return TowerPoly::var(f, i); }

}  // namespace

TowerRelations tower_relations(const TowerPresentation& p) {
    Field f = p.field();
    auto k = [&](const char* n) { return cst(p.get(n)); };
    TowerPoly x = gen(f, TX), w = gen(f, TW), z = gen(f, TZ);
    TowerRelations r{p.kind, {}};
    switch (p.kind) {
        case TowerKind::A: {
            TowerPoly c = k("c0") + k("c1") * x + x * x;
            TowerPoly A = k("c0") * k("A2") + cst(p.get("c1").inv()) + k("c1") * k("A2") * x + k("A2") * x * x;
            r.rels.push_back({TZ, 2, c * A});
            r.rels.push_back({TY, 2, c * (k("B0") + k("B1") * x + z)});
            break;
        }
        case TowerKind::B:
            r.rels.push_back({TW, 2, x + k("a2") * x * x});
            r.rels.push_back({TZ, 2, k("b0") + k("b2") * x * x + w});
            r.rels.push_back({TY, 2, x * z});
            break;
        case TowerKind::C:
            r.rels.push_back({TW, 2, k("a0") + x + k("a2") * x * x});
            r.rels.push_back({TZ, 2, k("b1") * w * w + w});
            r.rels.push_back({TY, 2, (k("c3") + k("c4") * x + z) * w});
            break;
        case TowerKind::D:
            r.rels.push_back({TZ, 4, k("a0") + x + k("a2") * x * x});
            r.rels.push_back({TY, 2, k("c0") + z + k("c2") * z * z});
            break;
    }
    return r;
}

TowerRelations validate_presentation(const TowerPresentation& p) {
    auto need = [&](bool ok, const std::string& what) {
        if (!ok) throw ConstraintViolation(what + " for kind " + kind_name(p.kind));
    };
    switch (p.kind) {
        case TowerKind::A:
            need(!p.get("c1").is_zero(), "c1 = 0");
            need(!is_square(p.get("A2")), "A2 in K^2");
            break;
        case TowerKind::B:
            need(!is_square(p.get("a2")), "a2 in K^2");
            break;
        case TowerKind::C:
            need(!is_square(p.get("a2")), "a2 in K^2");
            need(!is_square(p.get("b1")), "b1 in K^2");
            break;
        case TowerKind::D:
            need(!is_square(p.get("a2")), "a2 in K^2");
            need(is_square(p.get("c2") / p.get("a2")), "c2 not in K^2 a2");
            break;
    }
    return tower_relations(p);
}

TowerPoly reduce(const TowerPoly& f, const TowerRelations& r) {
    TowerPoly cur = f;
    for (int v : {TY, TZ, TW}) {
        const Relation* rel = nullptr;
        for (auto& x : r.rels)
            if (x.var == v) rel = &x;
        if (!rel) continue;
        std::map<int, TowerPoly> powers;
        auto rhs_pow = [&](int k) -> const TowerPoly& {
            auto it = powers.find(k);
            if (it != powers.end()) return it->second;
            return powers.emplace(k, rel->rhs.pow(k)).first->second;
        };
        TowerPoly out(f.field());
        for (auto& [e, c] : cur.terms()) {
            if (e[v] < rel->power) {
                out.add_term(e, c);
                continue;
            }
            auto e2 = e;
            e2[v] = e[v] % rel->power;
            out += rhs_pow(e[v] / rel->power).shift(e2).scale(c);
        }
        cur = out;
    }
    return cur;
}

bool is_nonhyperelliptic(const TowerPresentation& p) {
    switch (p.kind) {
        case TowerKind::A: return !p.get("B1").is_zero();
        case TowerKind::B: return true;
        case TowerKind::C: return !p.get("c4").is_zero();
        case TowerKind::D: return false;
    }
    return false;
}

TowerPresentation normalize(const TowerPresentation& p) {
    TowerPresentation q = p;
    if (p.kind == TowerKind::A && !p.get("B1").is_zero()) {
        ScalarK s = p.get("B0") / p.get("B1");
        q.set("c0", p.get("c0") + p.get("c1") * s + s * s);
        q.set("B0", ScalarK(p.field()));
    } else if (p.kind == TowerKind::C && !p.get("c4").is_zero()) {
        ScalarK s = p.get("c3") / p.get("c4");
        q.set("a0", p.get("a0") + s + p.get("a2") * s * s);
        q.set("c3", ScalarK(p.field()));
    }
    return q;
}

FamilyParams to_quartic_model(const TowerPresentation& p0) {
    validate_presentation(p0);
    if (!is_nonhyperelliptic(p0)) throw Hyperelliptic("kind " + kind_name(p0.kind) + " presentation is hyperelliptic");
    TowerPresentation p = normalize(p0);
    Field f = p.field();
    switch (p.kind) {
        case TowerKind::A: {
            ScalarK c1 = p.get("c1"), B1 = p.get("B1");
            return make_params(FamilyTag::III, p.get("A2"), (c1 * c1 * B1).inv(), c1 * B1, B1 * p.get("c0"));
        }
        case TowerKind::B: {
            ScalarK a2 = p.get("a2"), b0 = p.get("b0");
            return make_params(FamilyTag::IV, b0, a2, p.get("b2") + b0 * a2 * a2, ScalarK(f));
        }
        case TowerKind::C: {
            ScalarK a2i = p.get("a2").inv(), b1 = p.get("b1"), c4 = p.get("c4");
            ScalarK b1m2 = (b1 * b1).inv();
            return make_params(FamilyTag::V, a2i * b1m2 * c4 * c4, b1, a2i * c4 * c4 * (p.get("a0") + b1m2), c4 * a2i);
        }
        default:
            break;
    }
    throw Hyperelliptic("kind D is hyperelliptic");
}

TowerPresentation invert_model_map(const FamilyParams& m) {
    if (m.tag != FamilyTag::III) throw UnsupportedFamily("invert_model_map needs a family III record");
    check_family_constraints(m);
    Field f = m.a.field();
    ScalarK bc2 = m.b * m.c * m.c;
    TowerPresentation p = make_presentation(TowerKind::A, {m.d / bc2, (m.b * m.c).inv(), m.a, ScalarK(f), bc2});
    validate_presentation(p);
    return p;
}

Poly<ScalarK, 2> printed_breve_relation(const TowerPresentation& p0) {
    TowerPresentation p = normalize(p0);
    Field f = p.field();
    Poly<ScalarK, 2> r(f);
    auto add = [&](const ScalarK& c, int i, int j) { r.add_term({i, j}, c); };
    ScalarK one(f, 1);
    switch (p.kind) {
        case TowerKind::A: {
            ScalarK c0 = p.get("c0"), A2 = p.get("A2"), c1i = p.get("c1").inv(), B1i = p.get("B1").inv();
            ScalarK q = B1i * B1i * c1i * c1i;
            add(q, 0, 4), add(c0, 4, 0), add(B1i, 2, 2), add(B1i, 3, 0), add(c1i + q, 2, 0), add(B1i * A2, 0, 2),
                add(B1i * A2, 1, 0), add(c1i * A2 + c0 * A2 * A2, 0, 0);
            break;
        }
        case TowerKind::B: {
            ScalarK a2 = p.get("a2"), b0 = p.get("b0");
            add(one, 0, 4), add(p.get("b2") + b0 * a2 * a2, 0, 0), add(a2, 1, 0), add(one, 3, 0), add(b0, 4, 0);
            break;
        }
        case TowerKind::C: {
            ScalarK a0 = p.get("a0"), a2 = p.get("a2"), b1 = p.get("b1"), c4 = p.get("c4");
            add(a2, 0, 4), add(c4, 2, 2), add(c4 * c4 * a0, 4, 0), add(c4, 3, 0), add(c4 * b1, 0, 2), add(a2, 2, 0),
                add(c4 * b1, 1, 0), add(c4 * c4 * (b1 * b1 * a0 + one), 0, 0);
            break;
        }
        case TowerKind::D:
            throw Hyperelliptic("kind D has no quartic model");
    }
    return r;
}

TowerPoly breve_residual(const TowerPresentation& p0, const Poly<ScalarK, 2>& rel) {
    validate_presentation(p0);
    if (!is_nonhyperelliptic(p0)) throw Hyperelliptic("kind " + kind_name(p0.kind) + " presentation is hyperelliptic");
    TowerPresentation p = normalize(p0);
    Field f = p.field();
    TowerPoly x = gen(f, TX), w = gen(f, TW), z = gen(f, TZ), y = gen(f, TY);
    // u = U/q, v = V/q
    TowerPoly U, V = y, q;
    switch (p.kind) {
        case TowerKind::A:
            U = z, q = cst(p.get("c0")) + cst(p.get("c1")) * x + x * x;
            break;
        case TowerKind::B:
            U = w, q = x;
            break;
        default:
            U = z, q = w;
    }
    int deg = rel.total_degree();
    TowerPoly cleared(f);
    for (auto& [e, c] : rel.terms())
        cleared += (U.pow(e[0]) * V.pow(e[1]) * q.pow(deg - e[0] - e[1])).scale(c);
    return reduce(cleared, tower_relations(p));
}

bool verify_breve_relation(const TowerPresentation& p, const Poly<ScalarK, 2>& rel) {
    return breve_residual(p, rel).is_zero();
}

bool verify_breve_relation(const TowerPresentation& p) { return verify_breve_relation(p, printed_breve_relation(p)); }

bool preserves_relations(const TowerPresentation& p, const ScalarK& s) {
    TowerRelations r = tower_relations(p);
    Field f = p.field();
    std::array<TowerPoly, 4> sub{gen(f, TX) + cst(s), gen(f, TW), gen(f, TZ), gen(f, TY)};
    for (auto& rel : r.rels)
        if (!reduce(rel.rhs.substitute<4>(sub) - rel.rhs, r).is_zero()) return false;
    return true;
}

TowerInvariant tower_invariant_and_aut(const TowerPresentation& p) {
    validate_presentation(p);
    TowerInvariant out;
    ScalarK shift;
    switch (p.kind) {
        case TowerKind::A:
            out.iota = p.get("c1") * p.get("B1") * p.get("B1");
            shift = p.get("c1");
            break;
        case TowerKind::C:
            out.iota = p.get("c4").pow(4) / p.get("a2").pow(3);
            shift = p.get("a2").inv();
            break;
        case TowerKind::B:
            return out;
        case TowerKind::D:
            throw UnsupportedKind("no invariant is stated for kind D");
    }
    if (out.iota->is_zero()) {
        if (!preserves_relations(p, shift))
            throw InternalCheckFailed("automorphism generator does not preserve the relations");
        out.aut_shift = shift;
    }
    return out;
}

bool pseudocanonical_E_equals_F2(const TowerPresentation& p) {
    if (p.kind == TowerKind::D) throw UnsupportedKind("kind D is hyperelliptic");
    return p.kind == TowerKind::B;
}

namespace {

// x = e^2 + o^2 t with e, o in K (K has basis 1, t over K^2).
std::pair<ScalarK, ScalarK> split_even_odd(const ScalarK& x) {
    Field f = x.field();
    UPoly n = x.num() * x.den();
    std::vector<uint64_t> ev, od;
    for (int i = 0; i <= n.degree(); ++i) (i % 2 ? od : ev).push_back(n[i]);
    // n = E(t^2) + t O(t^2); E(t^2) = (E^{1/2}(t))^2 with coefficientwise roots
    auto root = [&](std::vector<uint64_t> c) {
        for (auto& v : c) v = f->sqrt(v);
        return UPoly(f, c);
    };
    ScalarK dinv = ScalarK(UPoly::constant(f, 1), x.den());
    return {ScalarK::from_poly(root(ev)) * dinv, ScalarK::from_poly(root(od)) * dinv};
}

}  // namespace

std::optional<std::pair<ScalarK, ScalarK>> k2_span_decompose(const ScalarK& b, const ScalarK& a) {
    Field f = b.field();
    auto [be, bo] = split_even_odd(b);
    auto [ae, ao] = split_even_odd(a);
    if (ao.is_zero()) {
        if (!bo.is_zero()) return std::nullopt;
        return std::make_pair(be, ScalarK(f));
    }
    // b = r0^2 + r1^2 a forces r1 = bo / ao on the t-component
    ScalarK r1 = bo / ao;
    ScalarK r0 = be + r1 * ae;
    if (r0 * r0 + r1 * r1 * a != b) throw InternalCheckFailed("K^2-span decomposition failed");
    return std::make_pair(r0, r1);
}

}  // namespace rq
