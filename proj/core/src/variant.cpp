#include "esgame/variant.hpp"

#include <string>

#include "esgame/error.hpp"

namespace esg {

std::string_view to_string(Variant v) { return v == Variant::Convex ? "convex" : "empty"; }

Variant parse_variant(std::string_view text) {
  if (text == "convex") return Variant::Convex;
  if (text == "empty") return Variant::Empty;
  throw Error(ErrorCode::InvalidArgument,
              "unknown variant '" + std::string(text) + "' (expected convex or empty)");
}

std::optional<GonWitness> find_losing_polygon(const OrderType& ot, Variant v, int k,
                                              int must_include) {
  return find_convex_kgon(ot, k, v == Variant::Empty, must_include);
}

std::optional<GonWitness> find_losing_polygon(std::span<const Point> points, Variant v, int k) {
  require_general_position(points);
  auto w = find_losing_polygon(OrderType(points), v, k);
  if (w) {
    for (int i : w->indices) w->vertices.push_back(points[i]);
  }
  return w;
}

}  // namespace esg
