#include "esgame/sampler.hpp"

#include <algorithm>

#include "esgame/error.hpp"
#include "esgame/hull.hpp"
#include "esgame/strategy.hpp"

namespace esg {

std::vector<Point> random_general_position(int n, Rng& rng, long range) {
  std::uniform_int_distribution<long> coord(0, range - 1);
  std::vector<Point> pts;
  while (static_cast<int>(pts.size()) < n) {
    Point p(coord(rng), coord(rng));
    bool ok = true;
    for (std::size_t i = 0; i < pts.size() && ok; ++i) {
      if (pts[i] == p) ok = false;
      for (std::size_t j = i + 1; j < pts.size() && ok; ++j) {
        if (orientation(pts[i], pts[j], p) == Orientation::Collinear) ok = false;
      }
    }
    if (ok) pts.push_back(std::move(p));
  }
  return pts;
}

Point random_point_in_cell(const Cell& cell, Rng& rng) {
  std::uniform_int_distribution<int> weight(1, 16);
  Rational sx(0), sy(0), total(0);
  for (const Point& v : cell.polygon) {
    const Rational w(weight(rng));
    sx += w * v.x;
    sy += w * v.y;
    total += w;
  }
  return dyadic_point_inside(cell.polygon, Point(Rational(sx / total), Rational(sy / total)));
}

Point random_adversary_move(std::span<const Point> points, Variant v, Rng& rng) {
  const CellSplit split = split_cells(points, v);
  std::vector<std::size_t> pool;
  for (std::size_t i = 0; i < split.cells.size(); ++i) {
    if (!split.losing[i]) pool.push_back(i);
  }
  if (pool.empty()) {
    for (std::size_t i = 0; i < split.cells.size(); ++i) pool.push_back(i);
  }
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  return random_point_in_cell(split.cells[pool[pick(rng)]], rng);
}

namespace {

// Point on the circle of radius r around c, from the rational
// parametrisation ((1 - t^2) / (1 + t^2), 2t / (1 + t^2)).
Point circle_point(const Point& c, const Rational& r, const Rational& t) {
  const Rational d = 1 + t * t;
  return Point(Rational(c.x + r * (1 - t * t) / d), Rational(c.y + r * 2 * t / d));
}

// Lower bound on the distance from c to the line through a and b:
// |n . (c - a)| / (|n_x| + |n_y|) never exceeds the Euclidean distance.
Rational distance_lower_bound(const Point& c, const Point& a, const Point& b) {
  const Rational nx = b.y - a.y, ny = a.x - b.x;
  const Rational dot = nx * (c.x - a.x) + ny * (c.y - a.y);
  return abs(dot) / (abs(nx) + abs(ny));
}

class LayerBuilder {
 public:
  explicit LayerBuilder(Rng& rng) : rng_(rng) {}

  std::vector<Point> ring(const Point& c, const Rational& r, int count) {
    std::uniform_int_distribution<long> num(-96, 96);
    std::uniform_int_distribution<long> den(1, 24);
    std::vector<Point> out;
    int guard = 0;
    while (static_cast<int>(out.size()) < count && ++guard < 10000) {
      Point p = circle_point(c, r, Rational(num(rng_), den(rng_)));
      if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
    }
    return out;
  }

  // Random interior centre of the polygon and a radius whose circle fits.
  std::pair<Point, Rational> inner_disc(const std::vector<Point>& ccw) {
    std::uniform_int_distribution<int> weight(1, 8);
    Rational sx(0), sy(0), total(0);
    for (const Point& v : ccw) {
      const Rational w(weight(rng_));
      sx += w * v.x;
      sy += w * v.y;
      total += w;
    }
    Point c(Rational(sx / total), Rational(sy / total));
    Rational rmax = distance_lower_bound(c, ccw[0], ccw[1]);
    for (std::size_t i = 1; i < ccw.size(); ++i) {
      rmax = std::min(rmax, distance_lower_bound(c, ccw[i], ccw[(i + 1) % ccw.size()]));
    }
    std::uniform_int_distribution<int> frac(3, 9);
    return {c, rmax * Rational(frac(rng_), 10)};
  }

 private:
  Rng& rng_;
};

}  // namespace

StructuredSample structured_sample(const LayerType& target, std::uint64_t seed, int attempts) {
  const auto& sizes = target.sizes;
  for (std::size_t i = 0; i + 1 < sizes.size(); ++i) {
    if (sizes[i] < 3) throw Error(ErrorCode::SamplerFailure, "only the last layer may have fewer than 3 points");
  }
  if (sizes.empty() || sizes.back() < 1) throw Error(ErrorCode::SamplerFailure, "empty signature");

  Rng rng(seed);
  LayerBuilder builder(rng);
  for (int attempt = 0; attempt < attempts; ++attempt) {
    std::vector<Point> pts;
    std::vector<Point> previous;
    for (std::size_t layer = 0; layer < sizes.size(); ++layer) {
      std::vector<Point> ring;
      if (layer == 0) {
        ring = builder.ring(Point(0, 0), Rational(1000), sizes[0]);
      } else {
        auto [c, r] = builder.inner_disc(previous);
        ring = sizes[layer] == 1 ? std::vector<Point>{c} : builder.ring(c, r, sizes[layer]);
      }
      pts.insert(pts.end(), ring.begin(), ring.end());
      if (ring.size() >= 3) previous = convex_hull(ring);
    }
    if (!in_general_position(pts)) continue;
    if (layer_type(pts) == target) return StructuredSample{target, std::move(pts), seed};
  }
  throw Error(ErrorCode::SamplerFailure, "could not realise layer type " + to_string(target));
}

}  // namespace esg
