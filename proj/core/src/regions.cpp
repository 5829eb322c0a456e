#include "esgame/regions.hpp"

#include "esgame/error.hpp"

namespace esg {

std::string_view to_string(RegionClass r) {
  switch (r) {
    case RegionClass::I:
      return "I";
    case RegionClass::O:
      return "O";
    case RegionClass::S:
      return "S";
    case RegionClass::Z:
      return "Z";
  }
  return "?";
}

RegionInfo region_info(const OrderType& ot, const std::array<int, 4>& quad, int p) {
  RegionInfo info;
  if (inside_convex(ot, quad, p)) {
    info.region = RegionClass::Z;
    return info;
  }
  for (int v = 0; v < 4; ++v) {
    const int a = quad[(v + 1) % 4], b = quad[(v + 2) % 4], c = quad[(v + 3) % 4];
    if (ot.in_triangle(quad[v], a, b, p) || ot.in_triangle(quad[v], b, c, p) ||
        ot.in_triangle(quad[v], a, c, p)) {
      info.hidden.push_back(v);
    }
  }
  switch (info.hidden.size()) {
    case 0:
      info.region = RegionClass::O;
      break;
    case 1:
      info.region = RegionClass::I;
      break;
    default:
      info.region = RegionClass::S;
      break;
  }
  return info;
}

RegionInfo region_info(std::span<const Point, 4> quad, const Point& p) {
  for (int i = 0; i < 4; ++i) {
    if (orientation(quad[i], quad[(i + 1) % 4], quad[(i + 2) % 4]) != Orientation::CounterClockwise) {
      throw Error(ErrorCode::DegenerateInput, "quad is not convex and counterclockwise");
    }
  }
  for (int i = 0; i < 4; ++i) {
    if (p == quad[i]) throw Error(ErrorCode::DegeneratePlacement, "point coincides with a quad vertex");
    for (int j = i + 1; j < 4; ++j) {
      if (orientation(quad[i], quad[j], p) == Orientation::Collinear) {
        throw Error(ErrorCode::DegeneratePlacement,
                    "point " + to_string(p) + " lies on a line through two quad vertices");
      }
    }
  }
  std::vector<Point> five(quad.begin(), quad.end());
  five.push_back(p);
  return region_info(OrderType(five), {0, 1, 2, 3}, 4);
}

RegionClass classify_region(std::span<const Point, 4> quad, const Point& p) {
  return region_info(quad, p).region;
}

TriangleRegion triangle_region(const OrderType& ot, const std::array<int, 3>& tri, int p) {
  const int a = tri[0], b = tri[1], c = tri[2];
  if (ot.in_triangle(p, a, b, c)) return {RegionClass::Z, -1};
  for (int v = 0; v < 3; ++v) {
    if (ot.in_triangle(tri[v], tri[(v + 1) % 3], tri[(v + 2) % 3], p)) return {RegionClass::I, v};
  }
  // Outside without hiding a vertex: beyond exactly one edge.
  const int s = ot.sign(a, b, c);
  for (int e = 0; e < 3; ++e) {
    if (ot.sign(tri[e], tri[(e + 1) % 3], p) == -s) return {RegionClass::O, e};
  }
  return {RegionClass::Z, -1};
}

Beam Beam::type1(Point a, Point b, Point c) {
  if (orientation(a, b, c) == Orientation::Collinear) {
    throw Error(ErrorCode::DegenerateInput, "type 1 beam anchors are collinear");
  }
  return Beam(BeamKind::Type1, {std::move(a), std::move(b), std::move(c)});
}

Beam Beam::type2(Point a, Point b, Point c, Point d) {
  const Orientation s = orientation(a, b, c);
  if (s == Orientation::Collinear || orientation(b, c, d) != s || orientation(c, d, a) != s ||
      orientation(d, a, b) != s) {
    throw Error(ErrorCode::DegenerateInput, "type 2 beam anchors are not a convex 4-gon in order");
  }
  return Beam(BeamKind::Type2, {std::move(a), std::move(b), std::move(c), std::move(d)});
}

bool beam_contains(const Beam& beam, const Point& p) {
  auto anchors = beam.anchors();
  const Point& a = anchors[0];
  const Point& b = anchors[1];
  const Point& c = anchors[2];
  if (beam.kind() == BeamKind::Type1) {
    const Orientation s = orientation(a, b, c);
    const bool in_cone = orientation(a, b, p) == s && orientation(a, c, p) == orientation(a, c, b);
    return in_cone && to_int(orientation(b, c, p)) == -to_int(orientation(b, c, a));
  }
  const Point& d = anchors[3];
  const bool in_strip = orientation(a, b, p) == orientation(a, b, c) &&
                        orientation(a, d, p) == orientation(a, d, b) &&
                        orientation(b, c, p) == orientation(b, c, a);
  return in_strip && to_int(orientation(c, d, p)) == -to_int(orientation(c, d, a));
}

}  // namespace esg
