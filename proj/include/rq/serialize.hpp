#pragma once

#include <json.hpp>

#include "rq/families.hpp"
#include "rq/fibres.hpp"
#include "rq/isomorphisms.hpp"
#include "rq/resolution.hpp"
#include "rq/tower.hpp"

namespace rq {

using Json = nlohmann::ordered_json;

// {"m": 2, "modulus": "u^2+u+1"}; field_from_json accepts either key alone.
Json field_to_json(Field f);
Field field_from_json(const Json& j);

// Scalars are written as canonical text and read back with parse_element.
Json params_to_json(const FamilyParams& p);
FamilyParams params_from_json(const Json& j);
Json presentation_to_json(const TowerPresentation& p);
TowerPresentation presentation_from_json(const Json& j);
Json witness_to_json(const IsoWitness& w);
IsoWitness witness_from_json(const Json& j, Field f);

Json point_to_json(const ProjPoint& p);
Json fibre_class_to_json(const FibreClass& c);
Json resolution_to_json(const ResolutionReport& r);
Json covering_to_json(const CoveringReport& c);

}  // namespace rq
