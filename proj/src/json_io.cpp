#include "pretzel/json_io.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace pretzel {

nlohmann::json poly_to_json(const LaurentPoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) {
    terms.push_back({{"l", e.l},
                     {"m", e.m},
                     {"num", numerator(c).str()},
                     {"den", denominator(c).str()}});
  }
  return terms;
}

LaurentPoly poly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be a list");
  LaurentPoly p;
  for (const auto& t : j) {
    const Integer num(t.at("num").get<std::string>());
    const Integer den(t.at("den").get<std::string>());
    p.add_term(ExpVec{t.at("m").get<std::int64_t>(), t.at("l").get<std::int64_t>()},
               Rational(num, den));
  }
  return p;
}

nlohmann::json rational_fn_to_json(const RationalFn& r) {
  nlohmann::json j{{"num", poly_to_json(r.num())}};
  if (!r.is_polynomial()) j["den"] = poly_to_json(r.den());
  return j;
}

RationalFn rational_fn_from_json(const nlohmann::json& j) {
  LaurentPoly num = poly_from_json(j.at("num"));
  if (!j.contains("den")) return RationalFn(std::move(num));
  return RationalFn(std::move(num), poly_from_json(j.at("den")));
}

nlohmann::json polygon_to_json(const LatticePolygon& poly) {
  nlohmann::json vertices = nlohmann::json::array();
  for (const auto& v : poly.vertices) {
    vertices.push_back({v.l, v.m});
  }
  return {{"coords", "(L,M)"}, {"vertices", vertices}};
}

}  // namespace pretzel
