#include "rq/resolution.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "rq/errors.hpp"
#include "rq/parse.hpp"

namespace rq {

namespace {

using Local = Poly<Fq, 2>;

Field F2() { return default_field(1); }

FormFq lift_to(const FormFq& F, Field to) {
    if (F.field() == to) return F;
    return embed_form(F, extend(F.field(), to->degree() / F.field()->degree()).emb);
}

// Every point of P^2(E), normalized.
void for_each_point(Field E, const std::function<void(const std::array<uint64_t, 3>&)>& fn) {
    uint64_t q = E->size();
    for (uint64_t y = 0; y < q; ++y)
        for (uint64_t z = 0; z < q; ++z) fn({1, y, z});
    for (uint64_t z = 0; z < q; ++z) fn({0, 1, z});
    fn({0, 0, 1});
}

// Common zeros over GF(2^(m r)), listed at their minimal r <= max_ext.
std::vector<ProjPoint> common_zeros(const std::vector<FormFq>& forms, int max_ext) {
    std::vector<ProjPoint> out;
    Field f = forms.front().field();
    for (int r = 1; r <= max_ext; ++r) {
        Field E = r == 1 ? f : extend(f, r).big;
        std::vector<FormFq> L;
        for (auto& F : forms) L.push_back(lift_to(F, E));
        for_each_point(E, [&](const std::array<uint64_t, 3>& c) {
            for (auto& F : L)
                if (eval_form(F, c)) return;
            for (int s = 1; s < r; ++s) {
                if (r % s) continue;
                bool below = true;
                for (uint64_t v : c) below = below && E->in_subfield(v, f->degree() * s);
                if (below) return;
            }
            out.push_back({E, c, r});
        });
    }
    return out;
}

int power_dividing(const FormFq& f, const FormFq& c) {
    int k = 0;
    FormFq g = f;
    while (!g.is_zero()) {
        auto d = g.divide(c);
        if (!d) break;
        g = *d;
        ++k;
    }
    return k;
}

Local drop(const Local& t, int var, int k) {
    Local r(t.field());
    for (auto& [e, c] : t.terms()) {
        auto e2 = e;
        e2[var] -= k;
        if (e2[var] < 0) throw InternalCheckFailed("exceptional factor does not divide");
        r.add_term(e2, c);
    }
    return r;
}

// chart A: (u, v) = (X, X Y); chart B: (u, v) = (X Y, Y). The exceptional
// curve is X = 0, resp. Y = 0; k copies of it are divided out.
Local pull_a(const Local& g, int k) {
    Field E = g.field();
    Local X = Local::var(E, 0), Y = Local::var(E, 1);
    return drop(g.substitute<2>({X, X * Y}), 0, k);
}

Local pull_b(const Local& g, int k) {
    Field E = g.field();
    Local X = Local::var(E, 0), Y = Local::var(E, 1);
    return drop(g.substitute<2>({X * Y, Y}), 1, k);
}

Local translate(const Local& g, uint64_t lam) {
    Field E = g.field();
    return g.substitute<2>({Local::var(E, 0), Local::var(E, 1) + Local::constant(E, lam)});
}

// Restriction of a chart-A equation to the exceptional curve X = 0.
UPoly restrict_a(const Local& g) {
    std::vector<uint64_t> c;
    for (auto& [e, k] : g.terms()) {
        if (e[0]) continue;
        if (int(c.size()) <= e[1]) c.resize(e[1] + 1, 0);
        c[e[1]] = k.v;
    }
    return UPoly(g.field(), c);
}

bool through_origin(const Local& g) { return g.constant_term().is_zero(); }

std::array<int, 3> axes_for(const std::array<uint64_t, 3>& p) {
    int i = p[0] ? 0 : (p[1] ? 1 : 2);
    return {i, i == 0 ? 1 : 0, i == 2 ? 1 : 2};
}

Local local_form(const FormFq& F, const std::array<uint64_t, 3>& p, const std::array<int, 3>& ax) {
    Field E = F.field();
    std::array<Local, 3> s;
    s[ax[0]] = Local::constant(E, 1);
    s[ax[1]] = Local::var(E, 0) + Local::constant(E, p[ax[1]]);
    s[ax[2]] = Local::var(E, 1) + Local::constant(E, p[ax[2]]);
    return F.substitute<2>(s);
}

struct Work {
    Local g0, g1;
    std::vector<std::pair<int, Local>> through;
    int parent, base;
    char chart;
    uint64_t lambda;
    std::array<int, 3> axes;
};

class Resolver {
public:
    explicit Resolver(ResolutionReport& r) : r_(r), per_base_(r.base_points.size(), 0) {}

    void run(const Work& w, int depth) {
        if (depth > 256) throw InternalCheckFailed("resolution does not terminate");
        Field E = w.g0.field();
        int k = int(r_.blowups.size());
        int m0 = w.g0.order(), m1 = w.g1.order(), m = std::min(m0, m1);
        int e = int(r_.curves.size());
        ResCurve ex;
        ex.id = std::string(1, char('E' + w.base)) + r_.pencil.prime + std::to_string(++per_base_[w.base]);
        ex.exceptional = true;
        ex.created_at = k;
        ex.mult_f0 = m0 - m;
        ex.mult_f1 = m1 - m;
        r_.curves.push_back(ex);
        r_.blowups.push_back({k, w.parent, w.base, w.chart, w.lambda, m, e, w.axes});
        r_.counts[w.base]++;
        for (auto& [c, eq] : w.through) r_.curves[c].mult[k] = eq.order();

        Local a0 = pull_a(w.g0, m), a1 = pull_a(w.g1, m), b0 = pull_b(w.g0, m), b1 = pull_b(w.g1, m);
        struct Strict {
            int id;
            Local a, b;
        };
        std::vector<Strict> st;
        for (auto& [c, eq] : w.through) {
            int o = eq.order();
            st.push_back({c, pull_a(eq, o), pull_b(eq, o)});
        }
        st.push_back({e, Local::var(E, 0), Local::var(E, 1)});

        // base points of the transformed pencil on the new curve
        UPoly g = gcd(restrict_a(a0), restrict_a(a1));
        std::vector<uint64_t> lams;
        if (g.degree() > 0) {
            UPoly sq = UPoly::constant(E, 1);
            for (auto& [h, i] : squarefree_decomposition(g)) sq *= h;
            if (splitting_degree(sq) > 1) throw NonRationalCenter("center outside the base field");
            lams = roots_in_field(sq);
        }
        bool b_child = through_origin(b0) && through_origin(b1);

        // meeting points on the new curve that are never blown up
        for (size_t i = 0; i < st.size(); ++i)
            for (size_t j = i + 1; j < st.size(); ++j) {
                UPoly common;
                if (st[j].id == e)
                    common = restrict_a(st[i].a);
                else
                    common = gcd(restrict_a(st[i].a), restrict_a(st[j].a));
                int cnt = 0;
                if (common.degree() > 0) {
                    cnt = distinct_root_count(common);
                    for (uint64_t l : lams) cnt -= common.eval(l) == 0;
                }
                if (!b_child && through_origin(st[i].b) && through_origin(st[j].b)) ++cnt;
                if (cnt > 0) r_.meeting_points[std::minmax(st[i].id, st[j].id)] += cnt;
            }

        for (uint64_t l : lams) {
            Work c{translate(a0, l), translate(a1, l), {}, k, w.base, 'A', l, w.axes};
            for (auto& s : st) {
                Local t = translate(s.a, l);
                if (through_origin(t)) c.through.push_back({s.id, t});
            }
            run(c, depth + 1);
        }
        if (b_child) {
            Work c{b0, b1, {}, k, w.base, 'B', 0, w.axes};
            for (auto& s : st)
                if (through_origin(s.b)) c.through.push_back({s.id, s.b});
            run(c, depth + 1);
        }
    }

private:
    ResolutionReport& r_;
    std::vector<int> per_base_;
};

// Class of a curve as (degree, a_j) with C = d H - sum a_j e_j.
std::pair<int, std::map<int, int>> curve_class(const ResCurve& c) {
    std::map<int, int> a = c.mult;
    if (c.exceptional) a[c.created_at] = -1;
    return {c.degree, a};
}

}  // namespace

PencilSpec make_pencil(const FormFq& f0, const FormFq& f1, std::vector<NamedCurve> curves, std::string prime) {
    if (f0.is_zero() || f1.is_zero()) throw ZeroForm("pencil member vanishes");
    if (!f0.is_homogeneous() || !f1.is_homogeneous()) throw NotHomogeneous("pencil forms must be homogeneous");
    if (f0.total_degree() != f1.total_degree()) throw DegreeMismatch("pencil forms of different degrees");
    int m = f0.field()->degree();
    int r = (8 + m - 1) / m;
    Field E = extend(f0.field(), r).big;
    FormFq a = lift_to(f0, E), b = lift_to(f1, E);
    long n = 0;
    for_each_point(E, [&](const std::array<uint64_t, 3>& c) { n += eval_form(a, c) == 0 && eval_form(b, c) == 0; });
    if (n > long(f0.total_degree()) * f1.total_degree())
        throw ZeroDivisor("pencil forms share a component (" + std::to_string(n) + " common points)");
    return {f0, f1, std::move(curves), std::move(prime)};
}

PencilSpec quartic_pencil() {
    Field f = F2();
    auto P = [&](const char* s) { return parse_form_fq(s, f); };
    return make_pencil(P("y^4 + x*z^3"), P("x^3*z"), {{"W", P("y^4 + x*z^3")}, {"X", P("x")}, {"Z", P("z")}});
}

PencilSpec cubic_pencil() {
    Field f = F2();
    auto P = [&](const char* s) { return parse_form_fq(s, f); };
    return make_pencil(P("x*y^2 + z^3"), P("x^2*z"), {{"W'", P("x*y^2 + z^3")}, {"X'", P("x")}, {"Z'", P("z")}},
                       "'");
}

std::vector<ProjPoint> base_points(const PencilSpec& p) {
    auto pts = common_zeros({p.f0, p.f1}, 1);
    std::sort(pts.begin(), pts.end(), [](const ProjPoint& a, const ProjPoint& b) { return a.c > b.c; });
    return pts;
}

ResolutionReport resolve_pencil(const PencilSpec& p) {
    ResolutionReport r;
    r.pencil = p;
    r.base_points = base_points(p);
    r.counts.assign(r.base_points.size(), 0);
    for (auto& nc : p.curves) {
        ResCurve c;
        c.id = nc.id;
        c.degree = nc.form.total_degree();
        c.mult_f0 = power_dividing(p.f0, nc.form);
        c.mult_f1 = power_dividing(p.f1, nc.form);
        r.curves.push_back(c);
    }
    Resolver res(r);
    for (size_t b = 0; b < r.base_points.size(); ++b) {
        auto& c = r.base_points[b].c;
        auto ax = axes_for(c);
        Work w{local_form(p.f0, c, ax), local_form(p.f1, c, ax), {}, -1, int(b), '-', 0, ax};
        for (size_t i = 0; i < p.curves.size(); ++i) {
            Local eq = local_form(p.curves[i].form, c, ax);
            if (through_origin(eq)) w.through.push_back({int(i), eq});
        }
        res.run(w, 0);
    }
    // meeting points of named curves away from the base points
    for (size_t i = 0; i < p.curves.size(); ++i)
        for (size_t j = i + 1; j < p.curves.size(); ++j) {
            int cnt = 0;
            for (auto& q : common_zeros({p.curves[i].form, p.curves[j].form}, 4)) {
                bool base = false;
                for (auto& b : r.base_points) base = base || (q.ext == 1 && q.c == b.c);
                cnt += !base;
            }
            if (cnt) r.meeting_points[{int(i), int(j)}] += cnt;
        }
    int d = p.f0.total_degree();
    r.generic_self_intersection = d * d;
    for (auto& b : r.blowups) r.generic_self_intersection -= b.base_multiplicity * b.base_multiplicity;
    // Bezout: a positive remainder means base points outside the base field
    if (r.generic_self_intersection != 0)
        throw NonRationalCenter("pencil has " + std::to_string(r.generic_self_intersection) +
                                " base points (with multiplicity) outside the base field");
    for (size_t i = 0; i < r.curves.size(); ++i) r.curves[i].self_int = r.intersection(int(i), int(i));
    r.notes =
        "The rational map between the resolved surfaces is claimed to be undefined only at the point X.Z and "
        "resolved by one further blowup; not verified here.";
    return r;
}

int ResolutionReport::find(const std::string& id) const {
    for (size_t i = 0; i < curves.size(); ++i)
        if (curves[i].id == id) return int(i);
    throw UnknownCurve("no curve '" + id + "' in the resolution");
}

int ResolutionReport::intersection(int a, int b) const {
    auto [da, ca] = curve_class(curves.at(a));
    auto [db, cb] = curve_class(curves.at(b));
    int s = da * db;
    for (auto& [j, v] : ca) {
        auto it = cb.find(j);
        if (it != cb.end()) s -= v * it->second;
    }
    return s;
}

int ResolutionReport::intersection(const std::string& a, const std::string& b) const {
    return intersection(find(a), find(b));
}

int ResolutionReport::meeting_point_count(int a, int b) const {
    auto it = meeting_points.find(std::minmax(a, b));
    return it == meeting_points.end() ? 0 : it->second;
}

std::vector<std::string> ResolutionReport::horizontal() const {
    std::vector<std::string> out;
    for (auto& c : curves)
        if (c.exceptional && c.mult_f0 == 0 && c.mult_f1 == 0) out.push_back(c.id);
    return out;
}

std::vector<FibreEntry> fibre_divisor(const ResolutionReport& r, uint64_t t0, uint64_t t1) {
    if (t0 == 0 && t1 == 0) throw UsageError("(0:0) is not a member");
    std::vector<FibreEntry> out;
    if (t0 != 0 && t1 != 0) {
        out.push_back({"C(" + std::to_string(t0) + ":" + std::to_string(t1) + ")", 1});
        return out;
    }
    for (auto& c : r.curves) {
        int m = t1 == 0 ? c.mult_f0 : c.mult_f1;
        if (m > 0) out.push_back({c.id, m});
    }
    return out;
}

std::vector<int> fibre_orthogonality(const ResolutionReport& r, uint64_t t0, uint64_t t1) {
    auto D = fibre_divisor(r, t0, t1);
    std::vector<int> out;
    for (auto& c : D) {
        int s = 0;
        for (auto& d : D) s += d.multiplicity * r.intersection(c.id, d.id);
        out.push_back(s);
    }
    return out;
}

std::vector<std::vector<int>> intersection_matrix(const ResolutionReport& r, const std::vector<std::string>& ids) {
    std::vector<int> idx;
    for (auto& s : ids) idx.push_back(r.find(s));
    std::vector<std::vector<int>> m(idx.size(), std::vector<int>(idx.size()));
    for (size_t i = 0; i < idx.size(); ++i)
        for (size_t j = 0; j < idx.size(); ++j) m[i][j] = r.intersection(idx[i], idx[j]);
    return m;
}

std::string dynkin_type(const ResolutionReport& r, const std::vector<std::string>& ids) {
    const std::string bad = "Unrecognized";
    int n = int(ids.size());
    if (n == 0) return bad;
    std::vector<int> idx;
    for (auto& s : ids) idx.push_back(r.find(s));
    for (int i : idx)
        if (r.intersection(i, i) != -2) return bad;
    if (n == 2) {
        int w = r.intersection(idx[0], idx[1]);
        if (w == 2) return r.meeting_point_count(idx[0], idx[1]) == 1 ? "~A1*" : "~A1";
    }
    std::vector<std::vector<int>> adj(n);
    int edges = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            int w = r.intersection(idx[i], idx[j]);
            if (w == 0) continue;
            if (w != 1) return bad;
            adj[i].push_back(j), adj[j].push_back(i), ++edges;
        }
    // connectivity
    std::vector<int> seen(n, 0), stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : adj[v])
            if (!seen[u]) seen[u] = 1, ++reached, stack.push_back(u);
    }
    if (reached != n) return bad;
    if (edges == n) {  // a cycle
        for (auto& a : adj)
            if (a.size() != 2) return bad;
        return "~A" + std::to_string(n - 1);
    }
    if (edges != n - 1) return bad;
    std::vector<int> branch;
    for (int i = 0; i < n; ++i)
        if (adj[i].size() > 2) branch.push_back(i);
    if (branch.empty()) return "A" + std::to_string(n);
    // arm lengths from a branch vertex
    auto arms = [&](int c) {
        std::vector<int> len;
        for (int u : adj[c]) {
            int prev = c, cur = u, l = 1;
            while (adj[cur].size() == 2) {
                int nx = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
                prev = cur, cur = nx, ++l;
            }
            if (adj[cur].size() > 2) return std::vector<int>{};
            len.push_back(l);
        }
        std::sort(len.begin(), len.end());
        return len;
    };
    if (branch.size() == 1) {
        int c = branch[0];
        if (adj[c].size() == 4) {
            auto a = arms(c);
            return a == std::vector<int>{1, 1, 1, 1} ? "~D4" : bad;
        }
        if (adj[c].size() != 3) return bad;
        auto a = arms(c);
        if (a.size() != 3) return bad;
        if (a[0] == 1 && a[1] == 1) return "D" + std::to_string(n);
        if (a == std::vector<int>{1, 2, 2}) return "E6";
        if (a == std::vector<int>{1, 2, 3}) return "E7";
        if (a == std::vector<int>{1, 2, 4}) return "E8";
        if (a == std::vector<int>{2, 2, 2}) return "~E6";
        if (a == std::vector<int>{1, 3, 3}) return "~E7";
        if (a == std::vector<int>{1, 2, 5}) return "~E8";
        return bad;
    }
    if (branch.size() == 2) {
        for (int c : branch)
            if (adj[c].size() != 3) return bad;
        int leaves = 0;
        for (auto& a : adj) leaves += a.size() == 1;
        if (leaves == 4) return "~D" + std::to_string(n - 1);
    }
    return bad;
}

namespace {

// Truncated power series in the arc parameter with coefficients in F2(s).
constexpr int kPrec = 40;
using Series = std::vector<ScalarK>;

Series series(Field f) { return Series(kPrec, ScalarK(f)); }

int order(const Series& a) {
    for (int i = 0; i < kPrec; ++i)
        if (!a[i].is_zero()) return i;
    return kPrec;
}

Series mul(const Series& a, const Series& b) {
    Series r = series(a[0].field());
    for (int i = 0; i < kPrec; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; i + j < kPrec; ++j)
            if (!b[j].is_zero()) r[i + j] += a[i] * b[j];
    }
    return r;
}

Series shift_down(const Series& a, int k) {
    Series r = series(a[0].field());
    for (int i = k; i < kPrec; ++i) r[i - k] = a[i];
    return r;
}

Series inverse(const Series& a) {
    Series r = series(a[0].field());
    ScalarK i0 = a[0].inv();
    r[0] = i0;
    for (int n = 1; n < kPrec; ++n) {
        ScalarK s(a[0].field());
        for (int k = 1; k <= n; ++k) s += a[k] * r[n - k];
        r[n] = s * i0;
    }
    return r;
}

// a / b with ord a >= ord b; precision drops by ord b.
Series divide(const Series& a, const Series& b) {
    int k = order(b);
    return mul(shift_down(a, k), inverse(shift_down(b, k)));
}

struct Landing {
    int curve = -1;  // exceptional curve reached, -1 if the arc misses every base point
    bool contracted = false;
    ScalarK lambda;  // coordinate of the landing point on the curve (chart A)
};

// Follows the arc t -> (X0(t) : X1(t) : X2(t)) into the resolution and reports
// where its limit point lies on the last exceptional curve it meets.
Landing follow_arc(const ResolutionReport& r, const std::array<Series, 3>& P) {
    Field f = P[0][0].field();
    int o = std::min({order(P[0]), order(P[1]), order(P[2])});
    std::array<ScalarK, 3> lim;
    for (int i = 0; i < 3; ++i) lim[i] = P[i][o];
    Landing out;
    for (size_t b = 0; b < r.base_points.size(); ++b) {
        auto& c = r.base_points[b].c;
        // limit point equals the base point?
        bool same = true;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                same = same && lim[i] * ScalarK(f, c[j]) == lim[j] * ScalarK(f, c[i]);
        if (!same) continue;
        int node = -1;
        for (auto& bl : r.blowups)
            if (bl.parent < 0 && bl.base == int(b)) node = bl.index;
        auto ax = r.blowups[node].axes;
        Series inv = inverse(shift_down(P[ax[0]], o));
        Series a = mul(shift_down(P[ax[1]], o), inv), bb = mul(shift_down(P[ax[2]], o), inv);
        a[0] -= ScalarK(f, c[ax[1]]);
        bb[0] -= ScalarK(f, c[ax[2]]);
        for (;;) {
            int oa = order(a), ob = order(bb);
            if (oa == 0 || ob == 0) throw InternalCheckFailed("arc left the center");
            char chart;
            ScalarK lam(f);
            if (ob >= oa) {
                bb = divide(bb, a);
                chart = 'A';
                lam = bb[0];
            } else {
                a = divide(a, bb);
                chart = 'B';
            }
            int next = -1;
            for (auto& bl : r.blowups) {
                if (bl.parent != node || bl.chart != chart) continue;
                if (chart == 'B' || (lam.is_constant() && lam.constant_value() == bl.lambda)) next = bl.index;
            }
            if (next < 0) {
                out.curve = r.blowups[node].curve;
                out.contracted = chart == 'B' || lam.is_constant();
                out.lambda = lam;
                return out;
            }
            if (chart == 'A') bb[0] -= ScalarK(f, r.blowups[next].lambda);
            node = next;
        }
    }
    return out;
}

ScalarK eval_at(const FormFq& F, const std::array<ScalarK, 3>& p) { return eval_scalar(from_fq(F), p); }

int rational_degree(const ScalarK& q) { return std::max(q.num().degree(), q.den().degree()); }

CurveImage plane_image(const std::array<FormFq, 3>& psi, const std::string& src, const std::string& tgt,
                       const FormFq& target, const std::array<ScalarK, 3>& param, int num, int den,
                       const std::function<std::array<ScalarK, 3>(const ScalarK&)>& target_param) {
    CurveImage ci;
    ci.source = src;
    ci.target = tgt;
    std::array<ScalarK, 3> img;
    for (int i = 0; i < 3; ++i) img[i] = eval_at(psi[i], param);
    ci.on_target = eval_at(target, img).is_zero();
    if (!ci.on_target || img[den].is_zero()) return ci;
    ScalarK rho = img[num] / img[den];
    auto back = target_param(rho);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) ci.on_target = ci.on_target && img[i] * back[j] == img[j] * back[i];
    ci.degree = rational_degree(rho);
    ci.inseparable = is_square(rho) && rational_degree(sqrt_element(rho)) * 2 == ci.degree;
    ci.map_text = "t -> " + rho.to_string();
    return ci;
}

}  // namespace

CoveringReport covering_check() {
    Field f = F2();
    return covering_check({parse_form_fq("x^2", f), parse_form_fq("y^2", f), parse_form_fq("x*z", f)});
}

CoveringReport covering_check(const std::array<FormFq, 3>& psi) {
    Field f = F2();
    PencilSpec q = quartic_pencil(), c = cubic_pencil();
    std::array<Poly<Fq, 3>, 3> s = psi;
    CoveringReport rep;
    FormFq pulled0 = c.f0.substitute<3>(s), pulled1 = c.f1.substitute<3>(s);
    auto k = pulled0.divide(q.f0);
    if (!k) throw IdentityFailed("f'0(psi) is not a multiple of f0: " + form_to_string(from_fq(pulled0)));
    FormFq residual = pulled1 - *k * q.f1;
    if (!residual.is_zero()) throw IdentityFailed("f'1(psi) - k f1 = " + form_to_string(from_fq(residual)));
    rep.common_factor = *k;

    ScalarK t = ScalarK::t(f), one(f, 1), zero(f);
    // Z = V(z) with (t : 1 : 0); Z' = V(w) with (r : 1 : 0)
    rep.curves.push_back(plane_image(psi, "Z", "Z'", c.curves[2].form, {t, one, zero}, 0, 1,
                                     [&](const ScalarK& r) { return std::array<ScalarK, 3>{r, one, zero}; }));
    // W = V(y^4 + x z^3) with (t^4 : t : 1); W' = V(u v^2 + w^3) with (r^3 : 1 : r)
    rep.curves.push_back(plane_image(psi, "W", "W'", c.curves[0].form, {t.pow(4), t, one}, 2, 1,
                                     [&](const ScalarK& r) { return std::array<ScalarK, 3>{r.pow(3), one, r}; }));
    // X = V(x): the arc x -> (x : 1 : t) through its generic point
    ResolutionReport rc = resolve_pencil(c);
    std::array<Series, 3> arc{series(f), series(f), series(f)};
    arc[0][1] = one, arc[1][0] = one, arc[2][0] = t;
    std::array<Series, 3> img{series(f), series(f), series(f)};
    for (int i = 0; i < 3; ++i)
        for (auto& [e, coef] : psi[i].terms()) {
            Series term = series(f);
            term[0] = ScalarK(f, coef.v);
            for (int v = 0; v < 3; ++v)
                for (int p = 0; p < e[v]; ++p) term = mul(term, arc[v]);
            for (int n = 0; n < kPrec; ++n) img[i][n] += term[n];
        }
    Landing L = follow_arc(rc, img);
    CurveImage ci;
    ci.source = "X";
    if (L.curve >= 0) {
        ci.target = rc.curves[L.curve].id;
        ci.on_target = !L.contracted;
        if (ci.on_target) {
            ci.degree = rational_degree(L.lambda);
            ci.inseparable = is_square(L.lambda) && rational_degree(sqrt_element(L.lambda)) * 2 == ci.degree;
            ci.map_text = "t -> " + L.lambda.to_string();
        }
    }
    rep.curves.push_back(ci);
    return rep;
}

}  // namespace rq
