#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "rq/families.hpp"
#include "rq/rng.hpp"

namespace rq {

// mu[i] holds mu_i (index 0 unused). III and V use mu2..mu5, IV uses
// mu1, mu2, mu4, mu5; the remaining slots stay zero.
struct IsoWitness {
    FamilyTag tag;
    std::array<ScalarK, 6> mu;
};

// The four witness constants in the order (mu2,mu3,mu4,mu5) for III and V,
// (mu1,mu2,mu4,mu5) for IV.
IsoWitness make_witness(FamilyTag tag, const std::array<ScalarK, 4>& v);
IsoWitness make_witness(FamilyTag tag, Field f, const std::array<std::string, 4>& v);
std::array<ScalarK, 4> witness_values(const IsoWitness& w);
IsoWitness identity_witness(FamilyTag tag, Field f);

// Both depend on the source parameters.
ScalarK iso_epsilon(const IsoWitness& w, const FamilyParams& src);
ScalarK iso_gamma(const IsoWitness& w, const FamilyParams& src);

QuarticModel apply_iso(const QuarticModel& m, const IsoWitness& w);

// z' = z_num / (z_scale den) and y' = y_num / (y_scale den) as rational
// functions of the source chart coordinates (y, z), with den = mu4 + mu5 z
// and the scales powers of epsilon.
struct IsoMaps {
    TriForm z_num, y_num, den;
    ScalarK z_scale, y_scale;
    bool is_identity() const;
    std::string z_text() const;
    std::string y_text() const;
};
IsoMaps iso_maps(const IsoWitness& w, const FamilyParams& src);

struct IsoCheck {
    bool ok;
    ScalarK lambda;  // cleared substituted target = lambda * source
};
// Throws SubstitutionMismatch carrying the residual when the substituted
// target is not a multiple of the source.
IsoCheck verify_iso(const QuarticModel& source, const QuarticModel& target, const IsoWitness& w);

// Numerator/denominator degrees <= 2, uniform coefficients, redrawn while
// epsilon = 0.
IsoWitness random_witness(std::mt19937_64& g, const FamilyParams& src);

struct AutViolation {
    IsoWitness witness;
    std::string reason;
};
std::vector<AutViolation> search_automorphisms(const QuarticModel& m, uint64_t seed, int n);

}  // namespace rq
