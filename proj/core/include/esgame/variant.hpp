#pragma once

#include <optional>
#include <span>
#include <string_view>

#include "esgame/order_type.hpp"
#include "esgame/patterns.hpp"
#include "esgame/point.hpp"

namespace esg {

// Convex: whoever completes a convex k-gon loses. Empty: only empty convex
// k-gons count.
enum class Variant { Convex, Empty };

std::string_view to_string(Variant v);
// Accepts "convex" and "empty". Throws Error{InvalidArgument}.
Variant parse_variant(std::string_view text);

// Losing polygon of the variant on an orientation table. With must_include
// set, only polygons through that index are reported; this is all that can
// appear when a point is added to a position that had none.
std::optional<GonWitness> find_losing_polygon(const OrderType& ot, Variant v, int k = 5,
                                              int must_include = -1);
std::optional<GonWitness> find_losing_polygon(std::span<const Point> points, Variant v, int k = 5);

}  // namespace esg
