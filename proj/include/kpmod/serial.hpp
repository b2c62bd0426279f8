// JSON (de)serialization for polynomials, modules and morphisms, with the
// deterministic orderings the CLI relies on.
#pragma once

#include <string>

#include "json.hpp"
#include "kpmod/poly.hpp"
#include "kpmod/weightmod.hpp"

namespace kp {

using nlohmann::json;

std::string rat_str(const Rat& q);   // "num" or "num/den"
Rat rat_parse(const std::string& s);

// {"format":1,"n":3,"terms":[{"exp":[2,1,0],"coeff":"1"},...]}, terms in
// descending lex order of exponent, coefficients as decimal strings.
json poly_to_json(const MultiPoly& p);
MultiPoly poly_from_json(const json& j);

// {"format":1,"n":3,"weights":[[...],...],"gens":{"e_1_2":[[r,c,"1"],...]},
//  "distinguished":0}; basis sorted with weights in lex order, entries
// row-major.
json module_to_json(const WeightModule& m);
WeightModule module_from_json(const json& j);

json morphism_to_json(const Morphism& f);

}  // namespace kp
