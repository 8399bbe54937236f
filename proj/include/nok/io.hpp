#pragma once

#include "nok/lp.hpp"
#include "nok/polygon.hpp"
#include "nok/polytope.hpp"
#include "nok/semigroup.hpp"

#include "json.hpp"

namespace nok {

/// JSON conventions: rationals are strings "p/q" (or "p"), valuation
/// vectors are {"a": [...], "b": [...]}, polygons are
/// {"c": ..., "lower": [[slope, intercept], ...], "upper": [...]}.

nlohmann::json rat_to_json(const Rat& x);
Rat rat_from_json(const nlohmann::json& j);

nlohmann::json qvec_to_json(const QVec& v);
QVec qvec_from_json(const nlohmann::json& j);

nlohmann::json valvector_to_json(const ValVector& v);
ValVector valvector_from_json(const nlohmann::json& j);

nlohmann::json polygon_to_json(const NewtonPolygon& P);
NewtonPolygon polygon_from_json(const nlohmann::json& j);

nlohmann::json hpoly_to_json(const HPolyhedron& H);
nlohmann::json vpoly_to_json(const VPolytope& V);

}  // namespace nok
