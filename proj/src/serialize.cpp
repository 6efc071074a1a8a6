#include "rq/serialize.hpp"

#include "rq/errors.hpp"
#include "rq/parse.hpp"

namespace rq {

namespace {

std::string text(const ScalarK& a) { return a.to_string(); }

ScalarK read(const Json& j, const char* key, Field f) {
    if (!j.contains(key)) return ScalarK(f);
    if (!j[key].is_string()) throw UsageError(std::string("field '") + key + "' must be a string");
    return parse_element(j[key].get<std::string>(), f);
}

const char* witness_names(FamilyTag t, int i) {
    static const char* a[] = {"mu2", "mu3", "mu4", "mu5"};
    static const char* b[] = {"mu1", "mu2", "mu4", "mu5"};
    return t == FamilyTag::IV ? b[i] : a[i];
}

Json coords(Field f, const std::array<uint64_t, 3>& c) {
    Json out = Json::array();
    for (uint64_t v : c) out.push_back(f->to_string(v));
    return out;
}

}  // namespace

Json field_to_json(Field f) { return {{"m", f->degree()}, {"modulus", modulus_to_string(f->modulus())}}; }

Field field_from_json(const Json& j) {
    if (j.contains("modulus")) {
        uint64_t mod = parse_modulus(j["modulus"].get<std::string>());
        return field(f2_degree(mod), mod);
    }
    return default_field(j.value("m", 1));
}

Json params_to_json(const FamilyParams& p) {
    return {{"tag", tag_name(p.tag)}, {"a", text(p.a)},  {"b", text(p.b)},
            {"c", text(p.c)},         {"d", text(p.d)},  {"field", field_to_json(p.a.field())}};
}

FamilyParams params_from_json(const Json& j) {
    Field f = field_from_json(j.value("field", Json::object()));
    return make_params(parse_tag(j.at("tag").get<std::string>()), read(j, "a", f), read(j, "b", f), read(j, "c", f),
                       read(j, "d", f));
}

Json presentation_to_json(const TowerPresentation& p) {
    Json j{{"kind", kind_name(p.kind)}};
    auto& names = kind_constants(p.kind);
    for (size_t i = 0; i < names.size(); ++i) j[names[i]] = text(p.values[i]);
    j["field"] = field_to_json(p.field());
    return j;
}

TowerPresentation presentation_from_json(const Json& j) {
    Field f = field_from_json(j.value("field", Json::object()));
    TowerKind k = parse_kind(j.at("kind").get<std::string>());
    std::vector<ScalarK> v;
    for (auto& n : kind_constants(k)) v.push_back(read(j, n.c_str(), f));
    return make_presentation(k, v);
}

Json witness_to_json(const IsoWitness& w) {
    Json j{{"tag", tag_name(w.tag)}};
    auto v = witness_values(w);
    for (int i = 0; i < 4; ++i) j[witness_names(w.tag, i)] = text(v[i]);
    return j;
}

IsoWitness witness_from_json(const Json& j, Field f) {
    FamilyTag t = parse_tag(j.at("tag").get<std::string>());
    std::array<ScalarK, 4> v;
    for (int i = 0; i < 4; ++i) v[i] = read(j, witness_names(t, i), f);
    return make_witness(t, v);
}

Json point_to_json(const ProjPoint& p) {
    return {{"text", p.to_string()}, {"coords", coords(p.field, p.c)}, {"ext", p.ext}};
}

Json fibre_class_to_json(const FibreClass& c) {
    Json j{{"variant", fibre_kind_name(c.kind)}};
    Json comps = Json::array();
    for (auto& k : c.components)
        comps.push_back({{"form", form_to_string(k.form)}, {"multiplicity", k.multiplicity}});
    j["components"] = comps;
    Json sing = Json::array();
    for (auto& p : c.singular_points) sing.push_back(point_to_json(p));
    j["singular_points"] = sing;
    if (c.sing_point) {
        j["singular_point"] = point_to_json(*c.sing_point);
        j["multiplicity"] = c.multiplicity;
        j["delta"] = {{"delta", c.delta.delta},
                      {"mult_sequence", c.delta.mult_sequence},
                      {"branches", c.delta.branches},
                      {"branch_split", c.delta.branch_split}};
    }
    if (c.sing_tangent)
        j["singular_tangent"] = {{"line", coords(c.sing_point->field, c.sing_tangent->line)},
                                 {"cone_multiplicity", c.sing_tangent->cone_multiplicity},
                                 {"intersection_multiplicity", c.sing_tangent->intersection_multiplicity}};
    if (c.kind == FibreKind::IntegralQuartic)
        j["tangent_type"] = {{"kind", contact_name(c.tangent_type.kind)},
                             {"profile", c.tangent_type.profile},
                             {"samples", c.tangent_samples},
                             {"agree", c.tangents_agree}};
    if (!c.note.empty()) j["note"] = c.note;
    return j;
}

Json resolution_to_json(const ResolutionReport& r) {
    Json j;
    j["pencil"] = {{"f0", form_to_string(r.pencil.f0)}, {"f1", form_to_string(r.pencil.f1)}};
    Json bps = Json::array();
    for (size_t i = 0; i < r.base_points.size(); ++i) {
        Json b = point_to_json(r.base_points[i]);
        b["blowups"] = r.counts[i];
        bps.push_back(b);
    }
    j["base_points"] = bps;
    j["counts"] = r.counts;
    Json bl = Json::array();
    for (auto& b : r.blowups)
        bl.push_back({{"index", b.index},
                      {"parent", b.parent},
                      {"base", b.base},
                      {"chart", std::string(1, b.chart)},
                      {"lambda", b.lambda},
                      {"base_multiplicity", b.base_multiplicity},
                      {"curve", r.curves[b.curve].id}});
    j["blowups"] = bl;
    Json cs = Json::array();
    for (auto& c : r.curves) {
        Json m = Json::object();
        for (auto& [k, v] : c.mult) m[std::to_string(k)] = v;
        cs.push_back({{"id", c.id},
                      {"exceptional", c.exceptional},
                      {"degree", c.degree},
                      {"self_intersection", c.self_int},
                      {"mult_f0", c.mult_f0},
                      {"mult_f1", c.mult_f1},
                      {"centers", m}});
    }
    j["curves"] = cs;
    Json mp = Json::array();
    for (auto& [k, v] : r.meeting_points)
        mp.push_back({{"curves", {r.curves[k.first].id, r.curves[k.second].id}},
                      {"points", v},
                      {"intersection", r.intersection(k.first, k.second)}});
    j["meetings"] = mp;
    for (auto [name, t0, t1] : {std::tuple{"fibre_1_0", 1, 0}, std::tuple{"fibre_0_1", 0, 1}}) {
        Json d = Json::array();
        for (auto& e : fibre_divisor(r, t0, t1)) d.push_back({{"id", e.id}, {"multiplicity", e.multiplicity}});
        j[name] = d;
    }
    j["horizontal"] = r.horizontal();
    j["generic_self_intersection"] = r.generic_self_intersection;
    j["notes"] = r.notes;
    return j;
}

Json covering_to_json(const CoveringReport& c) {
    Json j{{"common_factor", form_to_string(c.common_factor)}};
    Json cs = Json::array();
    for (auto& ci : c.curves)
        cs.push_back({{"source", ci.source},
                      {"target", ci.target},
                      {"on_target", ci.on_target},
                      {"degree", ci.degree},
                      {"inseparable", ci.inseparable},
                      {"map", ci.map_text}});
    j["curves"] = cs;
    return j;
}

}  // namespace rq
