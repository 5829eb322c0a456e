#pragma once

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "esgame/order_type.hpp"
#include "esgame/point.hpp"

namespace esg {

// Partition of the plane around a convex 4-gon by what a fifth point does:
//   O  the five points are in convex position
//   I  layer type (4,1) with the new point on the hull (one quad vertex hidden)
//   Z  the new point lies inside the 4-gon
//   S  layer type (3,2) (two quad vertices hidden)
enum class RegionClass { I, O, S, Z };

std::string_view to_string(RegionClass r);

struct RegionInfo {
  RegionClass region = RegionClass::Z;
  // Quad positions (0..3) of the vertices that leave the hull: one for I,
  // two for S, none otherwise.
  std::vector<int> hidden;
};

// quad: four points in convex position, counterclockwise. p must avoid every
// line through two quad vertices: Error{DegeneratePlacement} otherwise, and
// Error{DegenerateInput} when the quad itself is not convex and CCW.
RegionClass classify_region(std::span<const Point, 4> quad, const Point& p);
RegionInfo region_info(std::span<const Point, 4> quad, const Point& p);

// Same classification on an orientation table; quad holds indices into ot in
// counterclockwise order.
RegionInfo region_info(const OrderType& ot, const std::array<int, 4>& quad, int p);

// Region of a point relative to a triangle: I beyond a vertex (that vertex
// becomes interior), O beyond an edge (convex 4-gon), Z inside.
struct TriangleRegion {
  RegionClass region = RegionClass::Z;
  int vertex_or_edge = -1;  // hidden vertex for I, edge start for O
};
TriangleRegion triangle_region(const OrderType& ot, const std::array<int, 3>& tri, int p);

enum class BeamKind { Type1, Type2 };

// Type1 A:BC is the cone spanned by rays AB and AC with triangle ABC removed.
// Type2 AB:CD is the convex region bounded by segment AB and rays AD and BC
// with the 4-gon ABCD removed.
class Beam {
 public:
  static Beam type1(Point a, Point b, Point c);
  static Beam type2(Point a, Point b, Point c, Point d);

  BeamKind kind() const { return kind_; }
  std::span<const Point> anchors() const { return anchors_; }

 private:
  Beam(BeamKind kind, std::vector<Point> anchors) : kind_(kind), anchors_(std::move(anchors)) {}

  BeamKind kind_;
  std::vector<Point> anchors_;
};

// Strictly inside the cone or strip, and outside the closed deleted polygon.
bool beam_contains(const Beam& beam, const Point& p);

}  // namespace esg
