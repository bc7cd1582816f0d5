#ifndef MONKBENCH_FORCING_JSON_HPP
#define MONKBENCH_FORCING_JSON_HPP

#include "monkbench/ba/json.hpp"
#include "monkbench/forcing/amalgam.hpp"

namespace monkbench {

/// A label, or the string "inf".
Json cutoff_to_json(Cutoff c);

/// {"conditions":[presentation...],"root":[labels],"maps":[[[a, H_{l,0}(a)],...] per l]}
Json delta_family_to_json(const DeltaFamily& fam);
/// ParseError on malformed input; PreconditionError("b") when a map is not
/// an order-preserving bijection out of w^{p0}.
DeltaFamily delta_family_from_json(const Json& j, const PosetBounds& bounds = {});

/// The family's fields plus "tau" (s-expression over x1..xn) and "alpha0".
Json amalgam_instance_to_json(const AmalgamInstance& inst);
AmalgamInstance amalgam_instance_from_json(const Json& j, const PosetBounds& bounds = {});

/// {"facts":[{"name","pass","detail"}...],"q":...,"tau_star":...,"gamma":...,
///  "f0":[bits],"f1":[bits],"g":[bits],"pass":bool}
Json amalgam_result_to_json(const AmalgamResult& r, const AmalgamInstance& inst);

}  // namespace monkbench

#endif  // MONKBENCH_FORCING_JSON_HPP
