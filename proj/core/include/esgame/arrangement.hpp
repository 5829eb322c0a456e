#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "esgame/point.hpp"

namespace esg {

// Oriented line through input points i < j together with the side a cell
// occupies: side == orientation(p_i, p_j, x) for every x in the cell.
struct Halfplane {
  int i = 0;
  int j = 0;
  Orientation side = Orientation::Collinear;
};

// One face of the arrangement of all lines through two input points, clipped
// to a bounding box that strictly contains every arrangement vertex.
struct Cell {
  // Strictly interior, on no spanned line. A short dyadic rational near the
  // vertex centroid of the clipped face.
  Point representative;
  // Lines that carry an edge of the clipped face.
  std::vector<Halfplane> bounds;
  bool bounded = true;
  // Clipped face, counterclockwise.
  std::vector<Point> polygon;
  // orientation(p_i, p_j, representative) for every pair in point_pairs(n).
  std::vector<std::int8_t> signs;
};

// Faces of the line arrangement spanned by the points. Every face of the
// unclipped arrangement yields exactly one cell; cells come in a
// deterministic order. With fewer than two points there are no lines and a
// single cell covering the plane is returned (its representative avoids the
// input point). Throws Error{DegenerateInput} on duplicates or collinear
// triples.
std::vector<Cell> arrangement_cells(std::span<const Point> points);

// Shortest dyadic point (smallest power-of-two denominator) obtained by
// rounding target that lies strictly inside the convex polygon. target must
// itself be strictly inside.
Point dyadic_point_inside(std::span<const Point> ccw_polygon, const Point& target);

}  // namespace esg
