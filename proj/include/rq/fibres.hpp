#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rq/poly.hpp"
#include "rq/upoly.hpp"

namespace rq {

enum class Fibration { Pi3, Pi4, Pi5, QuarticPencil, CubicPencil };

std::string fibration_name(Fibration fb);  // pi3 pi4 pi5 pencil cubic-pencil
Fibration parse_fibration(const std::string& s);
int fibration_arity(Fibration fb);

// Homogeneous plane curve of degree 3 or 4 over a finite field.
struct PlaneCurveFq {
    FormFq form;
    Field field() const { return form.field(); }
    int degree() const { return form.total_degree(); }
};

PlaneCurveFq make_curve(const FormFq& f);

// params are elements of f; pencils take (t0, t1).
PlaneCurveFq specialize_fibre(Fibration fb, const std::vector<uint64_t>& params, Field f);

// Point of P^2 with coordinates in `field`, scaled so the first nonzero
// coordinate is 1. ext is the degree over the curve's field of the smallest
// field holding the coordinates.
struct ProjPoint {
    Field field = nullptr;
    std::array<uint64_t, 3> c{};
    int ext = 1;
    bool operator==(const ProjPoint& o) const { return field == o.field && c == o.c; }
    std::string to_string() const;
};

ProjPoint make_point(Field f, std::array<uint64_t, 3> c, int ext = 1);

// Points over GF(2^(m r)), r = 1..max_ext, each listed once at its minimal r.
std::vector<ProjPoint> singular_locus(const PlaneCurveFq& c, int max_ext);
// Rational points of the curve (r = 1), in enumeration order.
std::vector<ProjPoint> rational_points(const PlaneCurveFq& c);

int multiplicity_at(const PlaneCurveFq& c, const ProjPoint& p);

enum class ContactKind { Hyperflex4, Bitangent22, Other };
std::string contact_name(ContactKind k);

struct TangentType {
    ContactKind kind = ContactKind::Other;
    std::vector<int> profile;  // root multiplicities of the restricted quartic, descending
    bool operator==(const TangentType& o) const { return kind == o.kind && profile == o.profile; }
    std::string to_string() const;
};

TangentType tangent_contact_type(const PlaneCurveFq& c, const ProjPoint& p);

struct DeltaResult {
    int delta = 0;
    std::vector<int> mult_sequence;  // multiplicities of the infinitely near points, depth first
    int branches = 0;
    bool branch_split = false;  // some center had more than one tangent direction
};

DeltaResult delta_invariant(const PlaneCurveFq& c, const ProjPoint& p);

// A singular point with a single tangent line L: the multiplicity of L in
// the tangent cone and the intersection multiplicity of L with the curve at p.
struct SingularTangent {
    std::array<uint64_t, 3> line{};
    int cone_multiplicity = 0;
    int intersection_multiplicity = 0;
};
std::optional<SingularTangent> singular_tangent(const PlaneCurveFq& c, const ProjPoint& p);

bool is_smooth_conic(const FormFq& q);

enum class FibreKind { IntegralQuartic, ConicPlusDoubleLine, DoubleConic, LinePlusTripleLine, Other };
std::string fibre_kind_name(FibreKind k);

struct FibreComponent {
    FormFq form;
    int multiplicity;
};

struct FibreClass {
    FibreKind kind = FibreKind::Other;
    std::vector<FibreComponent> components;
    std::vector<ProjPoint> singular_points;  // over extensions of degree <= 2
    // IntegralQuartic data
    std::optional<ProjPoint> sing_point;
    int multiplicity = 0;
    DeltaResult delta;
    std::optional<SingularTangent> sing_tangent;
    TangentType tangent_type;
    int tangent_samples = 0;
    bool tangents_agree = true;
    std::string note;
};

FibreClass classify_fibre(const PlaneCurveFq& c, int tangent_samples = 8);

// Where the unique singular point of an integral fibre is predicted to be:
// pi3 (1 : a^1/4 : a^1/2), pi4 (1 : (ab^2+c)^1/4 : b^1/2),
// pi5 (1 : (ab^2+b)^1/4 : b^1/2), pencil (1 : 0 : (t1/t0)^1/2).
std::optional<ProjPoint> predicted_singular_point(Fibration fb, const std::vector<uint64_t>& params, Field f);

// The parameter whose value 1 (or 0 for pi4) separates multiplicity 3 from 2.
// Returns the expected multiplicity of the singular point of an integral fibre.
int predicted_multiplicity(Fibration fb, const std::vector<uint64_t>& params, Field f);

// Parses a comma separated list of elements of f (polynomials in u).
std::vector<uint64_t> parse_fq_list(const std::string& text, Field f);

}  // namespace rq
