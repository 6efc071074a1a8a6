#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rq/families.hpp"
#include "rq/poly.hpp"

namespace rq {

enum class TowerKind { A, B, C, D };

std::string kind_name(TowerKind k);
TowerKind parse_kind(const std::string& s);
// Constant names in presentation order, e.g. A -> c0 c1 A2 B0 B1.
const std::vector<std::string>& kind_constants(TowerKind k);

struct TowerPresentation {
    TowerKind kind;
    std::vector<ScalarK> values;  // same order as kind_constants(kind)

    const ScalarK& get(const std::string& name) const;
    void set(const std::string& name, const ScalarK& v);
    Field field() const { return values.front().field(); }
    bool operator==(const TowerPresentation& o) const { return kind == o.kind && values == o.values; }
};

TowerPresentation make_presentation(TowerKind k, std::vector<ScalarK> values);
TowerPresentation make_presentation(TowerKind k, Field f, const std::vector<std::string>& values);

// Polynomials in the generators, variables ordered x, w, z, y.
using TowerPoly = Poly<ScalarK, 4>;
enum TowerVar { TX = 0, TW = 1, TZ = 2, TY = 3 };

// var^power = rhs
struct Relation {
    int var;
    int power;
    TowerPoly rhs;
    std::string to_string() const;
};

struct TowerRelations {
    TowerKind kind;
    std::vector<Relation> rels;
};

// Checks the constraints of the kind and returns its defining relations.
TowerRelations validate_presentation(const TowerPresentation& p);
// Relations without validation.
TowerRelations tower_relations(const TowerPresentation& p);

// Normal form modulo the relations: the relation variables are rewritten
// in the order y, z, w, so every exponent of them ends below its power.
TowerPoly reduce(const TowerPoly& f, const TowerRelations& r);

bool is_nonhyperelliptic(const TowerPresentation& p);

// A: x -> x + B0/B1 so that B0 = 0. C: x -> x + c3/c4 so that c3 = 0.
// B and D are returned unchanged.
TowerPresentation normalize(const TowerPresentation& p);

FamilyParams to_quartic_model(const TowerPresentation& p);
TowerPresentation invert_model_map(const FamilyParams& params);

// Quartic between the two generators of the canonical field, as printed;
// variables (u, v) = (z, y) breve for A and C, (w, y) breve for B.
Poly<ScalarK, 2> printed_breve_relation(const TowerPresentation& p);

// Substitutes the breve generators into rel, clears the denominator and
// reduces modulo the relations of the normalized presentation.
TowerPoly breve_residual(const TowerPresentation& p, const Poly<ScalarK, 2>& rel);
bool verify_breve_relation(const TowerPresentation& p);
bool verify_breve_relation(const TowerPresentation& p, const Poly<ScalarK, 2>& rel);

struct TowerInvariant {
    std::optional<ScalarK> iota;
    std::optional<ScalarK> aut_shift;  // generator x -> x + shift, when iota = 0
};
TowerInvariant tower_invariant_and_aut(const TowerPresentation& p);

// True when x -> x + s maps every relation into the ideal of the relations.
bool preserves_relations(const TowerPresentation& p, const ScalarK& s);

bool pseudocanonical_E_equals_F2(const TowerPresentation& p);

// (r0, r1) with b = r0^2 + r1^2 a, if any.
std::optional<std::pair<ScalarK, ScalarK>> k2_span_decompose(const ScalarK& b, const ScalarK& a);

}  // namespace rq
