#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>

#include "rq/acceptance.hpp"
#include "rq/errors.hpp"
#include "rq/parse.hpp"
#include "rq/serialize.hpp"

namespace rqcli {

using namespace rq;

namespace {

struct Config {
    int field_m = 1;
    std::string field_poly;
    uint64_t seed = 0;
    std::string json_path;
    bool json = false;
    std::string out_path;

    std::string tag, a = "0", b = "0", c = "0", d = "0";
    std::string params, witness, kind, values, fibration, pencil = "quartic", action = "classify", form;
    std::vector<std::string> fix;
    std::string grid_values;
    bool grid_values_set = false;
    bool verify = false, covering = false;
    int jobs = 1;
    int only = 0;
};

struct Check {
    std::string name, anchor;
    bool pass;
};

struct Report {
    Json results = Json::object();
    std::vector<Check> checks;
    void check(std::string name, std::string anchor, bool pass) { checks.push_back({name, anchor, pass}); }
    bool ok() const {
        return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
    }
};

Field make_field(const Config& c) {
    if (!c.field_poly.empty()) {
        uint64_t mod = parse_modulus(c.field_poly);
        if (f2_degree(mod) != c.field_m && c.field_m != 1)
            throw UsageError("--field-poly has degree " + std::to_string(f2_degree(mod)) + ", not --field-m");
        return field(f2_degree(mod), mod);
    }
    return default_field(c.field_m);
}

std::vector<std::string> split(const std::string& s) {
    std::vector<std::string> out;
    if (s.empty()) return out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(tok);
    return out;
}

std::string text(const ScalarK& a) { return a.to_string(); }

// ---- commands ----

void cmd_family(const Config& c, Field f, Report& R) {
    if (c.tag.empty()) throw UsageError("family needs --tag");
    auto p = make_params(parse_tag(c.tag), f, c.a, c.b, c.c, c.d);
    R.results["params"] = params_to_json(p);
    auto m = build_family(p);
    R.results["form"] = form_to_string(m.form);
    Json pt = Json::array();
    for (auto& x : singular_point(m).coords) pt.push_back(x.to_string());
    R.results["singular_point"] = pt;
    // residue data is only known for III, IV and V
    if (p.tag != FamilyTag::I && p.tag != FamilyTag::II) {
        auto rp = residue_profile(m);
        Json r{{"deg_p", rp.deg_p}, {"deg_p1", rp.deg_p1}, {"deg_p2", rp.deg_p2}, {"e", rp.e}, {"e1", rp.e1}};
        if (rp.deg_p3) r["deg_p3"] = *rp.deg_p3;
        R.results["residue_profile"] = r;
    }
    auto inv = invariant(m);
    R.results["invariant"] = inv ? Json(text(*inv)) : Json(nullptr);
    bool strange = is_strange(m.form);
    R.results["strange"] = strange;
    R.check("constraints", "parameter constraints of the normal form", true);
    R.check("strange", "all tangent lines pass through one point", strange);
}

void cmd_tower(const Config& c, Field f, Report& R) {
    if (c.kind.empty()) throw UsageError("tower needs --kind");
    auto p = make_presentation(parse_kind(c.kind), f, split(c.values));
    R.results["presentation"] = presentation_to_json(p);
    auto rels = validate_presentation(p);
    Json rj = Json::array();
    for (auto& r : rels.rels) rj.push_back(r.to_string());
    R.results["relations"] = rj;
    bool nonhyp = is_nonhyperelliptic(p);
    R.results["nonhyperelliptic"] = nonhyp;
    if (!nonhyp || p.kind == TowerKind::D) return;
    auto model = to_quartic_model(p);
    R.results["quartic_model"] = params_to_json(model);
    R.results["quartic"] = form_to_string(build_family(model).form);
    bool breve = verify_breve_relation(p);
    R.results["breve_relation"] = poly_to_string(printed_breve_relation(p), "uv");
    auto ti = tower_invariant_and_aut(p);
    R.results["iota"] = ti.iota ? Json(text(*ti.iota)) : Json(nullptr);
    R.results["aut_shift"] = ti.aut_shift ? Json(text(*ti.aut_shift)) : Json(nullptr);
    R.check("breve relation", "quartic relation between the canonical generators", breve);
}

FamilyParams params_from_list(FamilyTag tag, Field f, const std::string& list) {
    auto v = split(list);
    size_t want = tag == FamilyTag::IV ? 3 : 4;
    if (v.size() != want && !(tag == FamilyTag::IV && v.size() == 4))
        throw UsageError("--params needs " + std::to_string(want) + " values for tag " + tag_name(tag));
    v.resize(4, "0");
    return make_params(tag, f, v[0], v[1], v[2], v[3]);
}

void cmd_iso(const Config& c, Field f, Report& R) {
    if (c.tag.empty()) throw UsageError("iso needs --tag");
    FamilyTag tag = parse_tag(c.tag);
    FamilyParams p = c.params.empty() ? make_params(tag, f, c.a, c.b, c.c, c.d) : params_from_list(tag, f, c.params);
    IsoWitness w;
    if (c.witness.empty()) {
        auto g = make_rng(c.seed, "cli-witness");
        w = random_witness(g, p);
    } else {
        auto v = split(c.witness);
        if (v.size() != 4) throw UsageError("--witness needs 4 values");
        w = make_witness(tag, f, {v[0], v[1], v[2], v[3]});
    }
    auto src = build_family(p);
    R.results["source"] = params_to_json(p);
    R.results["witness"] = witness_to_json(w);
    R.results["epsilon"] = text(iso_epsilon(w, p));
    auto tgt = apply_iso(src, w);
    R.results["target"] = params_to_json(tgt.params);
    auto maps = iso_maps(w, p);
    R.results["maps"] = {{"z", maps.z_text()}, {"y", maps.y_text()}, {"identity", maps.is_identity()}};
    bool closed = true;
    try {
        check_family_constraints(tgt.params);
    } catch (const ConstraintViolation&) {
        closed = false;
    }
    R.check("target constraints", "the image satisfies the constraints of its family", closed);
    if (c.verify) {
        auto v = verify_iso(src, tgt, w);
        R.results["verified"] = v.ok;
        R.results["lambda"] = text(v.lambda);
        R.check("verify_iso", "substituted target is a multiple of the source", v.ok);
    }
}

Json classify_json(const PlaneCurveFq& curve) {
    auto fc = classify_fibre(curve);
    Json j = fibre_class_to_json(fc);
    j["form"] = form_to_string(curve.form);
    if (fc.kind == FibreKind::IntegralQuartic) j["strange"] = is_strange(curve.form);
    return j;
}

void cmd_fibre(const Config& c, Field f, Report& R) {
    if (c.action != "classify" && c.action != "delta") throw UsageError("fibre action must be classify or delta");
    PlaneCurveFq curve;
    if (!c.form.empty()) {
        curve = make_curve(parse_form_fq(c.form, f));
    } else {
        if (c.fibration.empty()) throw UsageError("fibre needs --fibration or --form");
        Fibration fb = parse_fibration(c.fibration);
        auto p = parse_fq_list(c.params, f);
        curve = specialize_fibre(fb, p, f);
        R.results["fibration"] = fibration_name(fb);
        Json pj = Json::array();
        for (auto v : p) pj.push_back(f->to_string(v));
        R.results["params"] = pj;
        if (auto sp = predicted_singular_point(fb, p, f)) R.results["predicted_singular_point"] = sp->to_string();
    }
    if (c.action == "delta") {
        R.results["form"] = form_to_string(curve.form);
        Json pts = Json::array();
        for (auto& p : singular_locus(curve, 2)) {
            auto d = delta_invariant(curve, p);
            pts.push_back({{"point", point_to_json(p)},
                           {"multiplicity", multiplicity_at(curve, p)},
                           {"delta", d.delta},
                           {"mult_sequence", d.mult_sequence},
                           {"branches", d.branches}});
        }
        R.results["singular_points"] = pts;
        return;
    }
    Json j = classify_json(curve);
    bool integral = j["variant"] == "IntegralQuartic";
    R.results["fibre"] = j;
    if (integral) {
        R.check("delta", "delta 3 at the unique singular point", j["delta"]["delta"] == 3);
        R.check("strange", "integral fibres are strange", j["strange"] == true);
        R.check("tangents agree", "one tangent type at every sampled smooth point", j["tangent_type"]["agree"] == true);
    }
}

void cmd_scan(const Config& c, Field f, Report& R) {
    if (c.fibration.empty()) throw UsageError("scan needs --fibration");
    Fibration fb = parse_fibration(c.fibration);
    int n = fibration_arity(fb);
    static const char* kNames[] = {"a", "b", "c", "d"};
    auto slot_name = [&](int i) {
        return fb == Fibration::QuarticPencil || fb == Fibration::CubicPencil ? std::string(i ? "t1" : "t0")
                                                                              : std::string(kNames[i]);
    };
    std::vector<uint64_t> all;
    if (c.grid_values_set)
        all = parse_fq_list(c.grid_values, f);
    else
        for (uint64_t v = 0; v < f->size(); ++v) all.push_back(v);
    std::vector<std::vector<uint64_t>> axes(n, all);
    for (auto& fx : c.fix) {
        auto eq = fx.find('=');
        if (eq == std::string::npos) throw UsageError("--fix expects name=value");
        std::string name = fx.substr(0, eq);
        int i = 0;
        while (i < n && slot_name(i) != name) ++i;
        if (i == n) throw UsageError("no parameter '" + name + "' for " + fibration_name(fb));
        axes[i] = parse_fq_list(fx.substr(eq + 1), f);
    }
    std::vector<std::vector<uint64_t>> grid{{}};
    for (auto& ax : axes) {
        std::vector<std::vector<uint64_t>> next;
        for (auto& t : grid)
            for (uint64_t v : ax) {
                auto u = t;
                u.push_back(v);
                next.push_back(u);
            }
        grid = std::move(next);
    }
    struct Row {
        std::string variant;
        int multiplicity = 0;
        std::string error;
    };
    std::vector<Row> rows(grid.size());
    auto work = [&](size_t begin, size_t step) {
        for (size_t i = begin; i < grid.size(); i += step) {
            try {
                auto fc = classify_fibre(specialize_fibre(fb, grid[i], f), 0);
                rows[i].variant = fibre_kind_name(fc.kind);
                rows[i].multiplicity = fc.multiplicity;
            } catch (const Error& e) {
                rows[i].error = e.kind();
            }
        }
    };
    int jobs = std::max(1, c.jobs);
    std::vector<std::thread> pool;
    for (int j = 1; j < jobs; ++j) pool.emplace_back(work, size_t(j), size_t(jobs));
    work(0, jobs);
    for (auto& t : pool) t.join();

    Json fibres = Json::array();
    std::map<std::string, int> counts;
    for (size_t i = 0; i < grid.size(); ++i) {
        Json e = Json::object();
        Json p = Json::array();
        for (auto v : grid[i]) p.push_back(f->to_string(v));
        e["params"] = p;
        if (!rows[i].error.empty()) {
            e["error"] = rows[i].error;
            counts["error:" + rows[i].error]++;
        } else {
            e["variant"] = rows[i].variant;
            if (rows[i].multiplicity) e["multiplicity"] = rows[i].multiplicity;
            std::string key = rows[i].variant;
            if (rows[i].multiplicity) key += "/m" + std::to_string(rows[i].multiplicity);
            counts[key]++;
        }
        fibres.push_back(e);
    }
    R.results["fibration"] = fibration_name(fb);
    R.results["size"] = grid.size();
    R.results["counts"] = counts;
    R.results["fibres"] = fibres;
}

void cmd_resolve(const Config& c, Report& R) {
    PencilSpec p;
    if (c.pencil == "quartic")
        p = quartic_pencil();
    else if (c.pencil == "cubic")
        p = cubic_pencil();
    else
        throw UsageError("--pencil must be quartic or cubic");
    auto r = resolve_pencil(p);
    R.results = resolution_to_json(r);
    std::vector<int> want = c.pencil == "quartic" ? std::vector<int>{4, 12} : std::vector<int>{2, 7};
    R.check("blowup counts", "chains of blowups over the base points", r.counts == want);
    bool orth = true;
    for (auto [t0, t1] : {std::pair{1, 0}, std::pair{0, 1}})
        for (int v : fibre_orthogonality(r, t0, t1)) orth = orth && v == 0;
    R.check("fibre orthogonality", "D.C = 0 for each component C of a special fibre D", orth);
    R.check("generic self-intersection", "members become curves of self-intersection zero",
            r.generic_self_intersection == 0);
    if (c.covering) {
        auto cov = covering_check();
        R.results["covering"] = covering_to_json(cov);
        bool deg2 = true;
        for (auto& ci : cov.curves) deg2 = deg2 && ci.on_target && ci.degree == 2 && ci.inseparable;
        R.check("covering", "W, Z, X map onto W', Z', F'2 inseparably of degree 2", deg2);
    }
}

void cmd_accept(const Config& c, Report& R) {
    Json list = Json::array();
    auto add = [&](const CriterionResult& r) {
        list.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        R.check(std::to_string(r.id) + " " + r.name, r.anchor, r.pass);
    };
    if (c.only)
        add(run_criterion(c.only, c.seed));
    else
        run_acceptance(c.seed, add);
    R.results["criteria"] = list;
}

// ---- output ----

void flatten(const Json& j, const std::string& prefix, std::ostream& out) {
    if (j.is_object()) {
        for (auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
    } else if (j.is_array() && std::all_of(j.begin(), j.end(), [](const Json& x) { return x.is_primitive(); })) {
        out << prefix << ": [";
        bool first = true;
        for (auto& x : j) {
            out << (first ? "" : ", ") << (x.is_string() ? x.get<std::string>() : x.dump());
            first = false;
        }
        out << "]\n";
    } else if (j.is_array()) {
        for (size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
    } else {
        out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computations with quartic curve fibrations in characteristic two", "rq"};
    app.require_subcommand(1);
    Config c;
    auto common = [&](CLI::App* s) {
        s->add_option("--field-m", c.field_m, "degree m of the constant field GF(2^m)")->check(CLI::Range(1, 16));
        s->add_option("--field-poly", c.field_poly, "modulus of the constant field, e.g. u^2+u+1");
        s->add_option("--seed", c.seed, "seed for every random choice");
        s->add_option("--json", c.json_path, "emit JSON, to stdout or to the given file")->expected(0, 1);
        s->add_option("--out", c.out_path, "write the report to this file");
    };
    auto fam = app.add_subcommand("family", "build a normal form and report its invariants");
    auto tow = app.add_subcommand("tower", "validate a tower presentation and derive its quartic model");
    auto iso = app.add_subcommand("iso", "apply an isomorphism witness to a model");
    auto fib = app.add_subcommand("fibre", "classify one fibre of a universal fibration");
    auto scn = app.add_subcommand("scan", "classify every fibre on a parameter grid");
    auto res = app.add_subcommand("resolve", "resolve the base points of a pencil");
    auto acc = app.add_subcommand("accept", "run the acceptance suite");
    for (auto* s : {fam, tow, iso, fib, scn, res, acc}) common(s);
    for (auto* s : {fam, iso}) {
        s->add_option("--tag", c.tag, "family tag I..V");
        s->add_option("--a", c.a);
        s->add_option("--b", c.b);
        s->add_option("--c", c.c);
        s->add_option("--d", c.d);
    }
    iso->add_option("--params", c.params, "comma-separated a,b,c[,d]");
    iso->add_option("--witness", c.witness, "comma-separated witness constants");
    iso->add_flag("--verify", c.verify, "check the substitution identity");
    tow->add_option("--kind", c.kind, "presentation kind A..D")->required();
    tow->add_option("--values", c.values, "comma-separated constants in presentation order");
    fib->add_option("action", c.action, "classify or delta");
    fib->add_option("--fibration", c.fibration, "pi3, pi4, pi5, pencil, cubic-pencil");
    fib->add_option("--params", c.params, "comma-separated parameters in the constant field");
    fib->add_option("--form", c.form, "a plane cubic or quartic instead of a fibration member");
    scn->add_option("--fibration", c.fibration)->required();
    scn->add_option("--fix", c.fix, "restrict a parameter, e.g. d=0 or d=0,1");
    auto gv = scn->add_option("--values", c.grid_values, "values for every free parameter (default: the whole field)");
    scn->add_option("--jobs", c.jobs, "worker threads");
    res->add_option("--pencil", c.pencil, "quartic or cubic");
    res->add_flag("--covering", c.covering, "also check the covering map between the pencils");
    acc->add_option("--only", c.only, "run a single criterion");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    }
    c.grid_values_set = gv->count() > 0;
    CLI::App* sub = app.get_subcommands().front();
    std::string name = sub->get_name();
    c.json = sub->get_option("--json")->count() > 0;

    Json inputs = Json::object();
    inputs["args"] = args;

    Report R;
    int code = kOk;
    Json error;
    try {
        Field f = make_field(c);
        inputs["field"] = field_to_json(f);
        inputs["seed"] = c.seed;
        if (name == "family") cmd_family(c, f, R);
        if (name == "tower") cmd_tower(c, f, R);
        if (name == "iso") cmd_iso(c, f, R);
        if (name == "fibre") cmd_fibre(c, f, R);
        if (name == "scan") cmd_scan(c, f, R);
        if (name == "resolve") cmd_resolve(c, R);
        if (name == "accept") cmd_accept(c, R);
        if (!R.ok()) code = kFailure;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const SyntaxError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const InvalidField& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        error = {{"kind", e.kind()}, {"message", e.what()}};
        code = kFailure;
    }

    Json doc{{"command", name}, {"inputs", inputs}, {"results", R.results}};
    Json checks = Json::array();
    for (auto& k : R.checks) checks.push_back({{"name", k.name}, {"anchor", k.anchor}, {"pass", k.pass}});
    doc["checks"] = checks;
    if (!error.is_null()) doc["error"] = error;

    std::ostringstream body;
    if (c.json) {
        body << doc.dump(2) << "\n";
    } else {
        body << "command: " << name << "\n";
        flatten(R.results, "", body);
        for (auto& k : R.checks) body << "check " << k.name << ": " << (k.pass ? "pass" : "FAIL") << "\n";
        if (!error.is_null())
            body << "error " << error["kind"].get<std::string>() << ": " << error["message"].get<std::string>() << "\n";
    }
    std::string path = !c.json_path.empty() ? c.json_path : c.out_path;
    if (path.empty()) {
        out << body.str();
    } else {
        std::ofstream file(path);
        if (!file) {
            err << "cannot write " << path << "\n";
            return kFailure;
        }
        file << body.str();
    }
    if (!error.is_null()) err << error["kind"].get<std::string>() << ": " << error["message"].get<std::string>() << "\n";
    return code;
}

}  // namespace rqcli
