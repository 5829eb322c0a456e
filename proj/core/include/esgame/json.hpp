#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "esgame/error.hpp"
#include "esgame/point.hpp"
#include "esgame/rational.hpp"

namespace esg {

// Points travel as {"x": "p/q", "y": "p/q"}; finite decimals are accepted on
// input and converted exactly.
template <class Json>
void to_json(Json& j, const Point& p) {
  j = Json::object();
  j["x"] = to_string(p.x);
  j["y"] = to_string(p.y);
}

template <class Json>
Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.template get<std::string>());
  if (j.is_number_integer()) return Rational(j.template get<long>());
  throw Error(ErrorCode::InvalidArgument, "coordinate must be a rational string");
}

template <class Json>
void from_json(const Json& j, Point& p) {
  if (!j.is_object() || !j.contains("x") || !j.contains("y")) {
    throw Error(ErrorCode::InvalidArgument, "point needs fields x and y");
  }
  p = Point(rational_from_json(j.at("x")), rational_from_json(j.at("y")));
}

}  // namespace esg
