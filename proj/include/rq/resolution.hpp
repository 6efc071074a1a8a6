#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rq/fibres.hpp"
#include "rq/poly.hpp"

namespace rq {

struct NamedCurve {
    std::string id;
    FormFq form;  // irreducible plane curve followed through the blowups
};

// The pencil t0 f0 + t1 f1. Exceptional curves over the i-th base point are
// labelled with the i-th letter from E, and `prime` is appended to the letter
// and to the named curves (E'1, W').
struct PencilSpec {
    FormFq f0, f1;
    std::vector<NamedCurve> curves;
    std::string prime;
};

// Throws DegreeMismatch on unequal degrees and ZeroDivisor when f0, f1 share
// a component (detected by counting common points against the Bezout bound).
PencilSpec make_pencil(const FormFq& f0, const FormFq& f1, std::vector<NamedCurve> curves, std::string prime = "");
// t0 (y^4 + x z^3) + t1 x^3 z with W = V(y^4 + x z^3), X = V(x), Z = V(z).
PencilSpec quartic_pencil();
// t0 (u v^2 + w^3) + t1 u^2 w in the coordinates (u, v, w) = (x, y, z), with
// W' = V(u v^2 + w^3), X' = V(u), Z' = V(w).
PencilSpec cubic_pencil();

// Rational common zeros, in descending lexicographic order of the normalized
// coordinates (the processing order of resolve_pencil).
std::vector<ProjPoint> base_points(const PencilSpec& p);

struct Blowup {
    int index;
    int parent;  // -1 for a base point of the plane
    int base;    // index into ResolutionReport::base_points
    char chart;  // 'A': (u, u v) then v -> v + lambda; 'B': (u v, v); '-' at a base point
    uint64_t lambda = 0;
    int base_multiplicity;  // multiplicity of the generic member at the center
    int curve;              // the exceptional curve created here
    std::array<int, 3> axes{};  // at a base point: coordinate set to 1, then the two local coordinates
};

struct ResCurve {
    std::string id;
    bool exceptional = false;
    int degree = 0;       // plane curves
    int created_at = -1;  // exceptional curves
    std::map<int, int> mult;  // multiplicity of the strict transform at each center it passes through
    int mult_f0 = 0, mult_f1 = 0;  // multiplicity in the fibres over (1:0) and (0:1)
    int self_int = 0;
};

struct ResolutionReport {
    PencilSpec pencil;
    std::vector<ProjPoint> base_points;
    std::vector<int> counts;  // blowups over each base point
    std::vector<Blowup> blowups;
    std::vector<ResCurve> curves;  // named plane curves first, then exceptional ones in creation order
    // Distinct meeting points on the resolved surface for each pair of curves
    // with positive intersection number.
    std::map<std::pair<int, int>, int> meeting_points;
    int generic_self_intersection = 0;
    std::string notes;

    int find(const std::string& id) const;  // throws UnknownCurve
    int intersection(int a, int b) const;
    int intersection(const std::string& a, const std::string& b) const;
    int meeting_point_count(int a, int b) const;
    std::vector<std::string> horizontal() const;  // exceptional curves in neither special fibre
};

ResolutionReport resolve_pencil(const PencilSpec& p);

struct FibreEntry {
    std::string id;
    int multiplicity;
    bool operator==(const FibreEntry& o) const { return id == o.id && multiplicity == o.multiplicity; }
};
std::vector<FibreEntry> fibre_divisor(const ResolutionReport& r, uint64_t t0, uint64_t t1);
// D.C for the fibre divisor D of the member and each component C.
std::vector<int> fibre_orthogonality(const ResolutionReport& r, uint64_t t0, uint64_t t1);

std::vector<std::vector<int>> intersection_matrix(const ResolutionReport& r, const std::vector<std::string>& ids);

// "A<n>" for chains of (-2)-curves, "D<n>", "E6/7/8", their extended
// versions "~A<n>", "~D<n>", "~E6/7/8", "~A1*" for two (-2)-curves meeting
// once with intersection number 2, otherwise "Unrecognized".
std::string dynkin_type(const ResolutionReport& r, const std::vector<std::string>& ids);

struct CurveImage {
    std::string source, target;
    bool on_target = false;
    int degree = 0;
    bool inseparable = false;
    std::string map_text;  // the induced map between parameters
};

struct CoveringReport {
    FormFq common_factor;  // f'_i(psi) = common_factor * f_i
    std::vector<CurveImage> curves;
};

// psi = (x^2 : y^2 : x z) from the quartic plane to the cubic plane. Checks
// f'_i o psi = x^2 f_i for both pencil forms, then the images of W, Z and X.
// X is followed through the cubic resolution by an arc. Throws IdentityFailed.
CoveringReport covering_check();
CoveringReport covering_check(const std::array<FormFq, 3>& psi);

}  // namespace rq
