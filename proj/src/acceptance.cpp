#include "rq/acceptance.hpp"

#include <chrono>
#include <map>
#include <set>
#include <sstream>

#include "rq/errors.hpp"
#include "rq/families.hpp"
#include "rq/fibres.hpp"
#include "rq/isomorphisms.hpp"
#include "rq/parse.hpp"
#include "rq/resolution.hpp"
#include "rq/rng.hpp"
#include "rq/tower.hpp"

namespace rq {

namespace {

// Pinned bounds.
constexpr double kResolutionSeconds = 10;
constexpr double kIsoSeconds = 60;
constexpr double kKernelSeconds = 30;
constexpr int kIsoWitnesses = 100;
constexpr int kRandomForms = 500;
constexpr int kTowerSamples = 50;
constexpr int kF16Samples = 200;

// Counts checks and keeps the first few failure messages.
struct Tally {
    int checks = 0, failed = 0;
    std::vector<std::string> msgs;
    void operator()(bool ok, const std::string& what) {
        ++checks;
        if (ok) return;
        ++failed;
        if (msgs.size() < 3) msgs.push_back(what);
    }
    std::string summary() const {
        std::ostringstream s;
        s << checks - failed << "/" << checks << " checks";
        for (auto& m : msgs) s << "; " << m;
        return s.str();
    }
};

std::string join(const std::vector<int>& v) {
    std::string s;
    for (int x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
    return "(" + s + ")";
}

std::vector<int> mults(const std::vector<FibreEntry>& d) {
    std::vector<int> out;
    for (auto& e : d) out.push_back(e.multiplicity);
    return out;
}

std::vector<std::string> ids(const std::vector<FibreEntry>& d) {
    std::vector<std::string> out;
    for (auto& e : d) out.push_back(e.id);
    return out;
}

std::vector<std::vector<uint64_t>> grid(Field f, int arity) {
    std::vector<std::vector<uint64_t>> out{{}};
    for (int i = 0; i < arity; ++i) {
        std::vector<std::vector<uint64_t>> next;
        for (auto& t : out)
            for (uint64_t v = 0; v < f->size(); ++v) {
                auto u = t;
                u.push_back(v);
                next.push_back(u);
            }
        out = std::move(next);
    }
    return out;
}

std::string params_text(const std::vector<uint64_t>& p) {
    std::string s;
    for (auto v : p) s += (s.empty() ? "" : ",") + std::to_string(v);
    return s;
}

ScalarK nonzero(std::mt19937_64& g, Field f) {
    ScalarK r;
    do r = random_scalar(g, f, 2);
    while (r.is_zero());
    return r;
}

ScalarK nonsquare(std::mt19937_64& g, Field f) {
    ScalarK r;
    do r = random_scalar(g, f, 2);
    while (is_square(r));
    return r;
}

void c1(Tally& T) {
    auto q = resolve_pencil(quartic_pencil());
    auto c = resolve_pencil(cubic_pencil());
    T(q.counts == std::vector<int>{4, 12}, "quartic counts " + join(q.counts));
    T(c.counts == std::vector<int>{2, 7}, "cubic counts " + join(c.counts));
}

void c2(Tally& T) {
    auto q = resolve_pencil(quartic_pencil());
    auto c = resolve_pencil(cubic_pencil());
    auto a = mults(fibre_divisor(q, 1, 0)), b = mults(fibre_divisor(q, 0, 1)), d = mults(fibre_divisor(c, 0, 1));
    T(a == std::vector<int>{1, 2, 2, 1}, "quartic (1:0) " + join(a));
    T(b == std::vector<int>{3, 1, 2, 4, 6, 8, 7, 6, 5, 4, 3, 2, 1}, "quartic (0:1) " + join(b));
    T(d == std::vector<int>{2, 1, 2, 3, 4, 3, 2, 1}, "cubic (0:1) " + join(d));
}

void c3(Tally& T) {
    auto q = resolve_pencil(quartic_pencil());
    auto M = intersection_matrix(q, {"W", "E1", "E2", "E3"});
    T(M == std::vector<std::vector<int>>{{-6, 2, 1, 0}, {2, -2, 1, 0}, {1, 1, -2, 1}, {0, 0, 1, -2}},
      "matrix of W,E1,E2,E3");
    T(q.intersection("E4", "E4") == -1 && q.intersection("F12", "F12") == -1, "E^2 = F^2 = -1");
    T(q.intersection("X", "X") == -3 && q.intersection("Z", "Z") == -3, "X^2 = Z^2 = -3");
    for (int i = 1; i <= 3; ++i) T(q.intersection("E" + std::to_string(i), "E" + std::to_string(i)) == -2, "E chain");
    for (int i = 1; i <= 11; ++i)
        T(q.intersection("F" + std::to_string(i), "F" + std::to_string(i)) == -2, "F" + std::to_string(i) + "^2");
    T(q.intersection("W", "F12") == 1, "W.F = 1");
    T(q.intersection("Z", "E4") == 1, "Z.E = 1");
    auto c = resolve_pencil(cubic_pencil());
    for (auto* r : {&q, &c})
        for (auto [t0, t1] : {std::pair{1, 0}, std::pair{0, 1}}) {
            auto o = fibre_orthogonality(*r, t0, t1);
            for (size_t i = 0; i < o.size(); ++i) T(o[i] == 0, "D.C != 0");
        }
}

void c4(Tally& T) {
    auto q = resolve_pencil(quartic_pencil());
    auto c = resolve_pencil(cubic_pencil());
    std::vector<std::string> F;
    for (int i = 1; i <= 11; ++i) F.push_back("F" + std::to_string(i));
    std::string a3 = dynkin_type(q, {"E1", "E2", "E3"}), a11 = dynkin_type(q, F);
    std::string a1 = dynkin_type(c, ids(fibre_divisor(c, 1, 0))), e7 = dynkin_type(c, ids(fibre_divisor(c, 0, 1)));
    T(a3 == "A3", "E chain is " + a3);
    T(a11 == "A11", "F chain is " + a11);
    T(a1 == "~A1*", "cubic (1:0) is " + a1);
    T(e7 == "~E7", "cubic (0:1) is " + e7);
}

void c5(Tally& T) {
    auto rep = covering_check();
    Field f = default_field(1);
    T(rep.common_factor == parse_form_fq("x^2", f), "common factor " + form_to_string(rep.common_factor));
    int seen = 0;
    for (auto& ci : rep.curves) {
        if (ci.source != "Z" && ci.source != "W") continue;
        ++seen;
        T(ci.on_target && ci.degree == 2 && ci.inseparable,
          ci.source + " -> " + ci.target + " degree " + std::to_string(ci.degree));
    }
    T(seen == 2, "Z and W images reported");
    bool negative = false;
    try {
        covering_check({parse_form_fq("x", f), parse_form_fq("y", f), parse_form_fq("z", f)});
    } catch (const IdentityFailed&) {
        negative = true;
    }
    T(negative, "identity map accepted");
}

void c6(Tally& T, uint64_t seed) {
    for (int m : {1, 2}) {
        Field f = default_field(m);
        for (FamilyTag tag : {FamilyTag::III, FamilyTag::IV, FamilyTag::V}) {
            auto g = make_rng(seed, "accept-iso-" + std::to_string(m) + tag_name(tag));
            for (int i = 0; i < kIsoWitnesses; ++i) {
                FamilyParams p;
                switch (tag) {
                    case FamilyTag::III:
                        p = make_params(tag, nonsquare(g, f), nonzero(g, f), nonzero(g, f), random_scalar(g, f, 2));
                        break;
                    case FamilyTag::IV:
                        p = make_params(tag, random_scalar(g, f, 2), nonsquare(g, f), random_scalar(g, f, 2), ScalarK(f));
                        break;
                    default:
                        p = make_params(tag, nonsquare(g, f), nonsquare(g, f), random_scalar(g, f, 2), nonzero(g, f));
                }
                auto src = build_family(p);
                auto w = random_witness(g, src.params);
                std::string where = tag_name(tag) + " over F" + std::to_string(1 << m) + " #" + std::to_string(i);
                try {
                    auto tgt = apply_iso(src, w);
                    bool closed = true;
                    try {
                        check_family_constraints(tgt.params);
                    } catch (const ConstraintViolation&) {
                        closed = false;
                    }
                    T(closed, where + ": target violates constraints");
                    T(verify_iso(src, tgt, w).ok, where + ": verify_iso");
                    if (tag != FamilyTag::IV) T(*invariant(tgt) == *invariant(src), where + ": invariant changed");
                } catch (const Error& e) {
                    T(false, where + ": " + e.kind() + " " + e.what());
                }
                if (i == 0) {
                    auto id = identity_witness(tag, f);
                    T(apply_iso(src, id).params == src.params, where + ": identity moves the model");
                    T(iso_maps(id, src.params).is_identity(), where + ": identity maps");
                }
            }
        }
    }
}

void c7(Tally& T) {
    for (int m : {1, 2}) {
        Field f = default_field(m);
        std::string F = " over F" + std::to_string(1 << m);
        for (auto& p : grid(f, 4)) {
            if (p[1] == 0) {
                auto k = classify_fibre(specialize_fibre(Fibration::Pi3, p, f), 0).kind;
                T(k == FibreKind::ConicPlusDoubleLine, "pi3 " + params_text(p) + F + " is " + fibre_kind_name(k));
            }
            if (p[3] == 0) {
                auto k = classify_fibre(specialize_fibre(Fibration::Pi5, p, f), 0).kind;
                T(k == FibreKind::DoubleConic, "pi5 " + params_text(p) + F + " is " + fibre_kind_name(k));
            }
        }
        for (auto& p : grid(f, 3)) {
            if (p[1] != 0) continue;
            auto c = classify_fibre(specialize_fibre(Fibration::Pi4, p, f), 0);
            T(c.kind == FibreKind::IntegralQuartic && c.multiplicity == 3, "pi4 " + params_text(p) + F);
        }
        auto k = classify_fibre(specialize_fibre(Fibration::QuarticPencil, {0, 1}, f), 0).kind;
        T(k == FibreKind::LinePlusTripleLine, "pencil (0:1)" + F + " is " + fibre_kind_name(k));
    }
}

void check_generic(Tally& T, Fibration fb, const std::vector<uint64_t>& p, Field f, int& integral) {
    auto c = specialize_fibre(fb, p, f);
    auto fc = classify_fibre(c, 4);
    if (fc.kind != FibreKind::IntegralQuartic) return;
    ++integral;
    std::string where = fibration_name(fb) + " " + params_text(p) + " over F" + std::to_string(f->size());
    T(fc.singular_points.size() == 1, where + ": singular points");
    T(fc.sing_point && fc.sing_point == predicted_singular_point(fb, p, f), where + ": location");
    T(fc.multiplicity == predicted_multiplicity(fb, p, f), where + ": multiplicity");
    T(fc.delta.delta == 3, where + ": delta " + std::to_string(fc.delta.delta));
    T(is_strange(c.form), where + ": not strange");
    ContactKind want =
        fb == Fibration::Pi4 || fb == Fibration::QuarticPencil ? ContactKind::Hyperflex4 : ContactKind::Bitangent22;
    T(fc.tangent_samples > 0 && fc.tangents_agree && fc.tangent_type.kind == want, where + ": tangent type");
}

void c8(Tally& T, uint64_t seed) {
    Field f4 = default_field(2), f16 = default_field(4);
    std::map<Fibration, int> integral;
    for (auto& p : grid(f4, 4)) {
        check_generic(T, Fibration::Pi3, p, f4, integral[Fibration::Pi3]);
        check_generic(T, Fibration::Pi5, p, f4, integral[Fibration::Pi5]);
    }
    for (auto& p : grid(f4, 3)) check_generic(T, Fibration::Pi4, p, f4, integral[Fibration::Pi4]);
    for (auto& p : grid(f4, 2))
        if (p[0] || p[1]) check_generic(T, Fibration::QuarticPencil, p, f4, integral[Fibration::QuarticPencil]);
    auto g = make_rng(seed, "accept-f16");
    std::uniform_int_distribution<uint64_t> u(0, 15);
    for (int i = 0; i < kF16Samples; ++i) {
        check_generic(T, Fibration::Pi3, {u(g), u(g), u(g), u(g)}, f16, integral[Fibration::Pi3]);
        check_generic(T, Fibration::Pi4, {u(g), u(g), u(g)}, f16, integral[Fibration::Pi4]);
        check_generic(T, Fibration::Pi5, {u(g), u(g), u(g), u(g)}, f16, integral[Fibration::Pi5]);
        check_generic(T, Fibration::QuarticPencil, {1, u(g)}, f16, integral[Fibration::QuarticPencil]);
    }
    // both multiplicity loci are hit
    uint64_t c = 3, b = f16->inv(f16->pow(c, 3));
    int extra = 0;
    check_generic(T, Fibration::Pi3, {5, b, c, 9}, f16, extra);
    T(extra == 1 && predicted_multiplicity(Fibration::Pi3, {5, b, c, 9}, f16) == 3, "pi3 with b c^3 = 1");
    for (auto& [fb, n] : integral) T(n > 0, fibration_name(fb) + ": no integral fibre sampled");
}

void c9(Tally& T) {
    Field f = default_field(1);
    auto d = delta_invariant(make_curve(parse_form_fq("y^4 + x*z^3", f)), make_point(f, {1, 0, 0}));
    T(d.delta == 3, "y^4 + z^3 has delta " + std::to_string(d.delta));
    auto d1 = delta_invariant(make_curve(parse_form_fq("x*y^2 + z^3", f)), make_point(f, {1, 0, 0}));
    T(d1.delta == 1, "y^2 + z^3 has delta " + std::to_string(d1.delta));
    // every cubic pencil member t0 (u v^2 + w^3) + t1 u^2 w with t0 != 0 over F4
    Field f4 = default_field(2);
    for (uint64_t c = 0; c < 4; ++c) {
        FormFq F = parse_form_fq("x*y^2 + z^3", f4) + parse_form_fq("x^2*z", f4).scale(Fq(f4, c));
        auto curve = make_curve(F);
        auto sing = singular_locus(curve, 2);
        T(sing.size() == 1, "cubic member has one singular point");
        if (sing.size() == 1) T(delta_invariant(curve, sing[0]).delta == 1, "cubic member delta");
    }
}

void c10(Tally& T, uint64_t seed) {
    Field f = default_field(1);
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
    for (auto& n : polys)
        for (auto& d : polys)
            if (!d.is_zero()) {
                ScalarK x(n, d);
                T(is_square(x) == (squares.count(x.to_string()) == 1), "is_square(" + x.to_string() + ")");
            }
    auto g = make_rng(seed, "accept-forms");
    for (int k = 0; k < kRandomForms; ++k) {
        Field F = default_field(1 + k % 2);
        auto form = [&](int terms, int coeff_deg) {
            TriForm r(F);
            for (int i = 0; i < terms; ++i) {
                int a = std::uniform_int_distribution<int>(0, 2)(g);
                int b = std::uniform_int_distribution<int>(0, 2 - a)(g);
                r.add_term({a, b, 2 - a - b}, random_scalar(g, F, coeff_deg));
            }
            return r;
        };
        TriForm a = form(4, 2), b = form(3, 1);
        if (b.is_zero()) b = TriForm::var(F, 0, 2);
        auto s = form_square_root(a * a);
        T(s && *s * *s == a * a, "square root of a square");
        auto q = divide_form(a * b, b);
        T(q && *q == a, "exact division");
        // squares are closed under addition, so a^2 + b is a square iff b is
        T(form_square_root(a * a + b).has_value() == form_square_root(b).has_value(), "root of a^2 + b");
    }
}

TowerPresentation random_presentation(std::mt19937_64& g, TowerKind k, Field f, bool nonhyp) {
    auto any = [&] { return random_scalar(g, f, 2); };
    auto nz = [&] { return nonzero(g, f); };
    auto ns = [&] { return nonsquare(g, f); };
    switch (k) {
        case TowerKind::A: return make_presentation(k, {any(), nz(), ns(), any(), nonhyp ? nz() : ScalarK(f)});
        case TowerKind::B: return make_presentation(k, {ns(), any(), any()});
        case TowerKind::C: return make_presentation(k, {any(), ns(), ns(), any(), nonhyp ? nz() : ScalarK(f)});
        default: {
            ScalarK a2 = ns(), r = any();
            return make_presentation(k, {any(), a2, any(), r * r * a2});
        }
    }
}

void c11(Tally& T, uint64_t seed) {
    auto g = make_rng(seed, "accept-tower");
    for (int m : {1, 2}) {
        Field f = default_field(m);
        for (int i = 0; i < kTowerSamples; ++i) {
            auto params = make_params(FamilyTag::III, nonsquare(g, f), nonzero(g, f), nonzero(g, f),
                                      random_scalar(g, f, 2));
            T(to_quartic_model(invert_model_map(params)) == params, "model -> tower -> model");
            auto pres = normalize(random_presentation(g, TowerKind::A, f, true));
            T(invert_model_map(to_quartic_model(pres)) == pres, "tower -> model -> tower");
        }
        for (TowerKind k : {TowerKind::A, TowerKind::B, TowerKind::C})
            for (int i = 0; i < kTowerSamples; ++i)
                T(verify_breve_relation(random_presentation(g, k, f, true)), "breve relation " + kind_name(k));
    }
    for (TowerKind k : {TowerKind::A, TowerKind::B, TowerKind::C})
        for (int i = 0; i < kTowerSamples; ++i) {
            auto p = random_presentation(g, k, default_field(1), i % 2 == 0);
            bool built = true;
            try {
                build_family(to_quartic_model(p));
            } catch (const Error&) {
                built = false;
            }
            T(built == is_nonhyperelliptic(p), "nonhyperelliptic iff buildable (" + kind_name(k) + ")");
        }
}

struct Spec {
    const char* name;
    const char* anchor;
    double limit;
};

const Spec kSpecs[] = {
    {"resolution counts", "4 and 12 blowups over the quartic base points, 2 and 7 over the cubic ones",
     kResolutionSeconds},
    {"fibre divisors", "W + 2E1 + 2E2 + E3; 3X + Z + 2F1 + ... + F11; 2X' + Z' + 2F'1 + 3F'2 + 4F'3 + ...", 0},
    {"intersection data", "matrix of W, E1, E2, E3; self-intersections; D.C = 0", 0},
    {"Dynkin labels", "A3 and A11 on the quartic side, ~A1* and ~E7 on the cubic side", 0},
    {"covering identity", "tau' o psi = x^2 tau; Z -> Z' and W -> W' inseparable of degree 2", 0},
    {"isomorphism suite", "random witnesses over F2(t), F4(t) for III, IV, V; identity witness fixed", kIsoSeconds},
    {"degenerate fibres", "conic + double line, double conic, line + triple line, multiplicity-3 quartic", 0},
    {"generic fibres", "one singular point at the closed form; multiplicity; delta 3; strange; tangent type", 0},
    {"delta oracle", "delta(y^4 + z^3) = 3, delta(y^2 + z^3) = 1", 0},
    {"kernel oracles", "is_square against brute force; square root and division identities", kKernelSeconds},
    {"tower consistency", "model maps are mutually inverse; breve relations; hyperellipticity", 0},
};

}  // namespace

int acceptance_count() { return int(std::size(kSpecs)); }

CriterionResult run_criterion(int id, uint64_t seed) {
    if (id < 1 || id > acceptance_count()) throw UsageError("no acceptance criterion " + std::to_string(id));
    const Spec& s = kSpecs[id - 1];
    CriterionResult r{id, s.name, s.anchor, false, "", 0, s.limit};
    Tally T;
    auto t0 = std::chrono::steady_clock::now();
    try {
        switch (id) {
            case 1: c1(T); break;
            case 2: c2(T); break;
            case 3: c3(T); break;
            case 4: c4(T); break;
            case 5: c5(T); break;
            case 6: c6(T, seed); break;
            case 7: c7(T); break;
            case 8: c8(T, seed); break;
            case 9: c9(T); break;
            case 10: c10(T, seed); break;
            case 11: c11(T, seed); break;
        }
    } catch (const Error& e) {
        T(false, e.kind() + ": " + e.what());
    } catch (const std::exception& e) {
        T(false, e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    r.pass = T.failed == 0 && T.checks > 0;
    r.detail = T.summary();
    if (s.limit > 0 && r.seconds >= s.limit) {
        r.pass = false;
        r.detail += "; over the time limit";
    }
    return r;
}

std::vector<CriterionResult> run_acceptance(uint64_t seed, const std::function<void(const CriterionResult&)>& on_result) {
    std::vector<CriterionResult> out;
    for (int i = 1; i <= acceptance_count(); ++i) {
        out.push_back(run_criterion(i, seed));
        if (on_result) on_result(out.back());
    }
    return out;
}

}  // namespace rq
