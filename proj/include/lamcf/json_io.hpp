#pragma once

#include <json.hpp>

#include "lamcf/gl2.hpp"
#include "lamcf/hecke.hpp"
#include "lamcf/invariants.hpp"
#include "lamcf/legendre.hpp"
#include "lamcf/regular_cf.hpp"

namespace lamcf::json {

using nlohmann::json;

/// JSON number when the value fits in 64 bits, decimal string otherwise.
json from_int(const Int& v);
/// Accepts a JSON integer or a decimal string.
Int to_int(const json& j);

json from_cf(const RegularCF& cf);  // {"prefix":[..], "period":[..]|null, "kind":..}
RegularCF to_cf(const json& j);

json from_matrix(const IntMat2& m);  // {"a":"..","b":"..","c":"..","d":".."}
IntMat2 to_matrix(const json& j);

json from_surd(const QuadSurd& s);  // {"p":..,"q":..,"r":..,"D":..}
json from_boundary_point(const BoundaryPoint& x);
json from_axis(const Axis& axis);

json from_surface(const SurfaceInvariants& s);
json from_step(const LegendreStep& step);

json from_delta(const SingularityData& delta);  // doubled parts
json from_invariant(const LaminationInvariant& inv);
LaminationInvariant to_invariant(const json& j);

}  // namespace lamcf::json
