#include "esgame/hull.hpp"

#include <algorithm>

#include "esgame/error.hpp"

namespace esg {

std::vector<Point> convex_hull(std::span<const Point> points) {
  std::vector<Point> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end(), LexLess{});
  if (auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end()) {
    throw Error(ErrorCode::DuplicatePoint, "duplicate point " + to_string(*dup));
  }
  if (sorted.size() <= 2) return sorted;

  // Andrew's monotone chain; strict turns only, so collinear boundary points
  // are not reported.
  std::vector<Point> hull;
  hull.reserve(2 * sorted.size());
  for (const Point& p : sorted) {
    while (hull.size() >= 2 &&
           orientation(hull[hull.size() - 2], hull.back(), p) != Orientation::CounterClockwise) {
      hull.pop_back();
    }
    hull.push_back(p);
  }
  const std::size_t lower = hull.size() + 1;
  for (auto it = sorted.rbegin() + 1; it != sorted.rend(); ++it) {
    while (hull.size() >= lower &&
           orientation(hull[hull.size() - 2], hull.back(), *it) != Orientation::CounterClockwise) {
      hull.pop_back();
    }
    hull.push_back(*it);
  }
  hull.pop_back();
  return hull;
}

std::vector<std::vector<Point>> convex_layers(std::span<const Point> points) {
  std::vector<Point> remaining(points.begin(), points.end());
  std::vector<std::vector<Point>> layers;
  while (!remaining.empty()) {
    std::vector<Point> layer = convex_hull(remaining);
    if (layer.size() <= 2) {
      // With fewer than three points the "hull" is the whole remainder. This
      // also catches a collinear remainder, which general position rules out.
      if (layer.size() < remaining.size() && remaining.size() > 2) {
        throw Error(ErrorCode::DegenerateInput, "collinear remainder while peeling layers");
      }
      std::sort(remaining.begin(), remaining.end(), LexLess{});
      layers.push_back(std::move(remaining));
      break;
    }
    std::vector<Point> rest;
    rest.reserve(remaining.size() - layer.size());
    for (const Point& p : remaining) {
      if (std::find(layer.begin(), layer.end(), p) == layer.end()) rest.push_back(p);
    }
    layers.push_back(std::move(layer));
    remaining = std::move(rest);
  }
  return layers;
}

bool strictly_inside_convex(std::span<const Point> ccw_polygon, const Point& p) {
  const std::size_t m = ccw_polygon.size();
  if (m < 3) return false;
  for (std::size_t i = 0; i < m; ++i) {
    if (orientation(ccw_polygon[i], ccw_polygon[(i + 1) % m], p) != Orientation::CounterClockwise) {
      return false;
    }
  }
  return true;
}

}  // namespace esg
