#pragma once

// JSON forms. BigInt values travel as decimal strings.
//
//   BiPoly      [{"a":int,"b":int,"c":"decimal"}, ...] ascending (a, b)
//   XPoly       [BiPoly, ...] by x-degree
//   RationalGF  {"num": XPoly, "den": XPoly}
//   Tiling      {"m":,"n":,"k":,"bars":[{"dir":"H"|"V","row":,"col":}]}

#include "bartiler/poly.hpp"
#include "bartiler/tiling.hpp"

#include "json.hpp"

namespace bartiler {

nlohmann::json to_json(const BiPoly& p);
nlohmann::json to_json(const XPoly& p);
nlohmann::json to_json(const RationalGF& r);
nlohmann::json to_json(const Tiling& t);

BiPoly bipoly_from_json(const nlohmann::json& j);
XPoly xpoly_from_json(const nlohmann::json& j);
RationalGF rational_from_json(const nlohmann::json& j);
Tiling tiling_from_json(const nlohmann::json& j);

}  // namespace bartiler
