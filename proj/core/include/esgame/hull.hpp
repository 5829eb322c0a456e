#pragma once

#include <span>
#include <vector>

#include "esgame/point.hpp"

namespace esg {

// Hull vertices in counterclockwise order starting from the lexicographically
// smallest point. Points on the relative interior of a hull edge are dropped.
// Throws Error{DuplicatePoint}.
std::vector<Point> convex_hull(std::span<const Point> points);

// Onion peeling: layer 0 is the hull of all points, layer j the hull of what
// remains after removing layers 0..j-1. A trailing layer may hold 1 or 2
// points. Throws Error{DuplicatePoint}.
std::vector<std::vector<Point>> convex_layers(std::span<const Point> points);

// Strictly inside a convex polygon given in counterclockwise order.
bool strictly_inside_convex(std::span<const Point> ccw_polygon, const Point& p);

}  // namespace esg
