#include "esgame/point.hpp"

#include <algorithm>

#include "esgame/error.hpp"

namespace esg {

bool lex_less(const Point& a, const Point& b) {
  int cx = cmp(a.x, b.x);
  if (cx != 0) return cx < 0;
  return cmp(a.y, b.y) < 0;
}

Point operator+(const Point& a, const Point& b) {
  return Point(Rational(a.x + b.x), Rational(a.y + b.y));
}

Point operator-(const Point& a, const Point& b) {
  return Point(Rational(a.x - b.x), Rational(a.y - b.y));
}

Point operator*(const Rational& s, const Point& p) {
  return Point(Rational(s * p.x), Rational(s * p.y));
}

Point midpoint(const Point& a, const Point& b) {
  return Point(Rational((a.x + b.x) / 2), Rational((a.y + b.y) / 2));
}

Rational cross(const Point& u, const Point& v) {
  return Rational(u.x * v.y - u.y * v.x);
}

Orientation orientation(const Point& p, const Point& q, const Point& r) {
  Rational det = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
  return static_cast<Orientation>(sgn(det));
}

std::string to_string(const Point& p) {
  return "(" + to_string(p.x) + ", " + to_string(p.y) + ")";
}

std::string to_string(Orientation o) {
  switch (o) {
    case Orientation::Clockwise:
      return "clockwise";
    case Orientation::Collinear:
      return "collinear";
    case Orientation::CounterClockwise:
      return "counterclockwise";
  }
  return "?";
}

void require_distinct(std::span<const Point> points) {
  std::vector<Point> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end(), LexLess{});
  auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end()) {
    throw Error(ErrorCode::DuplicatePoint, "duplicate point " + to_string(*dup));
  }
}

void require_general_position(std::span<const Point> points) {
  require_distinct(points);
  const std::size_t n = points.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        if (orientation(points[i], points[j], points[k]) == Orientation::Collinear) {
          throw Error(ErrorCode::DegenerateInput,
                      "collinear points " + to_string(points[i]) + ", " +
                          to_string(points[j]) + ", " + to_string(points[k]));
        }
      }
    }
  }
}

bool in_general_position(std::span<const Point> points) {
  try {
    require_general_position(points);
    return true;
  } catch (const Error&) {
    return false;
  }
}

}  // namespace esg
