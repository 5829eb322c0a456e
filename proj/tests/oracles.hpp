#pragma once

// Brute-force references for the geometry. Everything here is written from
// the definitions with plain loops over exact rationals and calls nothing
// from the library except the Point/Rational types.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "esgame/point.hpp"

namespace oracle {

using esg::Point;
using esg::Rational;

inline int orient(const Point& a, const Point& b, const Point& c) {
  const Rational d = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return sgn(d);
}

inline bool general_position(const std::vector<Point>& p) {
  const int n = static_cast<int>(p.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (p[i] == p[j]) return false;
      for (int k = j + 1; k < n; ++k)
        if (orient(p[i], p[j], p[k]) == 0) return false;
    }
  return true;
}

// Strictly inside triangle abc (either orientation).
inline bool in_triangle(const Point& a, const Point& b, const Point& c, const Point& q) {
  const int s1 = orient(a, b, q), s2 = orient(b, c, q), s3 = orient(c, a, q);
  return (s1 > 0 && s2 > 0 && s3 > 0) || (s1 < 0 && s2 < 0 && s3 < 0);
}

// p[i] is a hull vertex iff some line through it and another point has all
// remaining points strictly on one side.
inline std::vector<int> hull_members(const std::vector<Point>& p, const std::vector<int>& ids) {
  if (ids.size() <= 2) return ids;
  std::vector<int> out;
  for (int a : ids) {
    bool on_hull = false;
    for (int b : ids) {
      if (b == a || on_hull) continue;
      int pos = 0, neg = 0;
      for (int c : ids) {
        if (c == a || c == b) continue;
        const int s = orient(p[a], p[b], p[c]);
        pos += s > 0;
        neg += s < 0;
      }
      on_hull = pos == 0 || neg == 0;
    }
    if (on_hull) out.push_back(a);
  }
  return out;
}

inline std::vector<int> all_ids(std::size_t n) {
  std::vector<int> ids(n);
  for (std::size_t i = 0; i < n; ++i) ids[i] = static_cast<int>(i);
  return ids;
}

// Repeated peeling; sizes of the layers from the outside in.
inline std::vector<int> layer_sizes(const std::vector<Point>& p) {
  std::vector<int> rest = all_ids(p.size()), sizes;
  while (!rest.empty()) {
    const auto h = hull_members(p, rest);
    sizes.push_back(static_cast<int>(h.size()));
    std::vector<int> next;
    for (int i : rest)
      if (std::find(h.begin(), h.end(), i) == h.end()) next.push_back(i);
    rest = next;
  }
  return sizes;
}

// No member inside a triangle of three others.
inline bool convex_position(const std::vector<Point>& p, const std::vector<int>& s) {
  const int m = static_cast<int>(s.size());
  for (int q = 0; q < m; ++q)
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b)
        for (int c = b + 1; c < m; ++c) {
          if (q == a || q == b || q == c) continue;
          if (in_triangle(p[s[a]], p[s[b]], p[s[c]], p[s[q]])) return false;
        }
  return true;
}

// Some point outside s lies strictly inside the hull of s (fan of triangles).
inline bool has_interior_point(const std::vector<Point>& p, const std::vector<int>& s) {
  for (int q = 0; q < static_cast<int>(p.size()); ++q) {
    if (std::find(s.begin(), s.end(), q) != s.end()) continue;
    for (std::size_t a = 0; a < s.size(); ++a)
      for (std::size_t b = a + 1; b < s.size(); ++b)
        for (std::size_t c = b + 1; c < s.size(); ++c)
          if (in_triangle(p[s[a]], p[s[b]], p[s[c]], p[q])) return true;
  }
  return false;
}

template <class Fn>
void each_subset(int n, int k, Fn&& fn) {
  std::vector<int> pick;
  auto rec = [&](auto&& self, int from) -> void {
    if (static_cast<int>(pick.size()) == k) {
      fn(pick);
      return;
    }
    for (int i = from; i < n; ++i) {
      pick.push_back(i);
      self(self, i + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
}

// Number of k-subsets in convex position (and empty, when asked).
inline int count_kgons(const std::vector<Point>& p, int k, bool empty) {
  int count = 0;
  each_subset(static_cast<int>(p.size()), k, [&](const std::vector<int>& s) {
    if (convex_position(p, s) && (!empty || !has_interior_point(p, s))) ++count;
  });
  return count;
}

// Region of p relative to a convex quad, by the layer type of the 5 points:
// O convex position, S type (3,2), Z p interior, I type (4,1) with p on hull.
inline char quad_region(const std::vector<Point>& quad, const Point& p) {
  std::vector<Point> five = quad;
  five.push_back(p);
  const auto sizes = layer_sizes(five);
  if (sizes == std::vector<int>{5}) return 'O';
  if (sizes == std::vector<int>{3, 2}) return 'S';
  const auto hull = hull_members(five, all_ids(5));
  return std::find(hull.begin(), hull.end(), 4) == hull.end() ? 'Z' : 'I';
}

// Faces of the arrangement of all lines spanned by the points:
// 1 + L + sum over crossing points of (lines through it - 1).
inline std::size_t arrangement_faces(const std::vector<Point>& p) {
  struct Line {
    Rational a, b, c;  // a x + b y = c
  };
  std::vector<Line> lines;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      Line l{p[j].y - p[i].y, p[i].x - p[j].x, 0};
      l.c = l.a * p[i].x + l.b * p[i].y;
      lines.push_back(l);
    }
  std::map<std::pair<Rational, Rational>, std::set<std::size_t>> crossings;
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      const auto& u = lines[i];
      const auto& v = lines[j];
      const Rational det = u.a * v.b - u.b * v.a;
      if (det == 0) continue;
      const Rational x = (u.c * v.b - u.b * v.c) / det;
      const Rational y = (u.a * v.c - u.c * v.a) / det;
      auto& s = crossings[{x, y}];
      s.insert(i);
      s.insert(j);
    }
  std::size_t faces = 1 + lines.size();
  for (const auto& [pt, through] : crossings) faces += through.size() - 1;
  return faces;
}

// Random general-position set; small coordinate ranges on purpose so that
// near-degenerate layouts show up, plus optional halves/thirds.
inline std::vector<Point> random_set(int n, std::mt19937_64& rng, int range, bool fractions) {
  std::uniform_int_distribution<int> coord(-range, range);
  std::uniform_int_distribution<int> den(1, 3);
  while (true) {
    std::vector<Point> p;
    for (int i = 0; i < n; ++i) {
      Rational x(coord(rng)), y(coord(rng));
      if (fractions) {
        x /= den(rng);
        y /= den(rng);
      }
      p.emplace_back(x, y);
    }
    if (general_position(p)) return p;
  }
}

}  // namespace oracle
