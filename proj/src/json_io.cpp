#include "bartiler/json_io.hpp"
#include "bartiler/error.hpp"

namespace bartiler {

using nlohmann::json;

json to_json(const BiPoly& p) {
  json out = json::array();
  for (const auto& t : p.terms()) {
    out.push_back({{"a", t.exp.a}, {"b", t.exp.b}, {"c", to_decimal(t.coeff)}});
  }
  return out;
}

json to_json(const XPoly& p) {
  json out = json::array();
  for (const auto& c : p.coeffs()) out.push_back(to_json(c));
  return out;
}

json to_json(const RationalGF& r) { return {{"num", to_json(r.num())}, {"den", to_json(r.den())}}; }

json to_json(const Tiling& t) {
  json bars = json::array();
  for (const auto& bar : t.bars) {
    bars.push_back({{"dir", bar.dir == Dir::H ? "H" : "V"}, {"row", bar.row}, {"col", bar.col}});
  }
  return {{"m", t.m}, {"n", t.n}, {"k", t.k}, {"bars", std::move(bars)}};
}

BiPoly bipoly_from_json(const json& j) {
  if (!j.is_array()) throw Error(Errc::PreconditionViolated, "BiPoly JSON must be an array");
  std::vector<BiPoly::Term> terms;
  for (const auto& t : j) {
    const auto& c = t.at("c");
    const BigInt coeff = c.is_string() ? from_decimal(c.get<std::string>()) : BigInt(c.get<long>());
    terms.push_back({{t.at("a").get<std::uint32_t>(), t.at("b").get<std::uint32_t>()}, coeff});
  }
  return BiPoly::from_terms(std::move(terms));
}

XPoly xpoly_from_json(const json& j) {
  if (!j.is_array()) throw Error(Errc::PreconditionViolated, "XPoly JSON must be an array");
  std::vector<BiPoly> coeffs;
  for (const auto& c : j) coeffs.push_back(bipoly_from_json(c));
  return XPoly(std::move(coeffs));
}

RationalGF rational_from_json(const json& j) {
  return RationalGF(xpoly_from_json(j.at("num")), xpoly_from_json(j.at("den")));
}

Tiling tiling_from_json(const json& j) {
  Tiling t;
  t.m = j.at("m").get<int>();
  t.n = j.at("n").get<int>();
  t.k = j.at("k").get<int>();
  for (const auto& bar : j.at("bars")) {
    const auto dir = bar.at("dir").get<std::string>();
    if (dir != "H" && dir != "V") throw Error(Errc::PreconditionViolated, "bar dir must be H or V");
    t.bars.push_back({dir == "H" ? Dir::H : Dir::V, bar.at("row").get<int>(), bar.at("col").get<int>()});
  }
  return t;
}

}  // namespace bartiler
