#include "esgame/order_type.hpp"

#include <algorithm>

namespace esg {

std::vector<std::pair<int, int>> point_pairs(int n) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<std::size_t>(n) * (n > 0 ? n - 1 : 0) / 2);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  return pairs;
}

void OrderType::set(int i, int j, int k, int s) {
  auto put = [&](int a, int b, int c, int v) {
    table_[(static_cast<std::size_t>(a) * n_ + b) * n_ + c] = static_cast<std::int8_t>(v);
  };
  put(i, j, k, s);
  put(j, k, i, s);
  put(k, i, j, s);
  put(j, i, k, -s);
  put(i, k, j, -s);
  put(k, j, i, -s);
}

OrderType::OrderType(std::span<const Point> points)
    : n_(static_cast<int>(points.size())),
      table_(static_cast<std::size_t>(n_) * n_ * n_, 0) {
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      const Rational dx = points[j].x - points[i].x;
      const Rational dy = points[j].y - points[i].y;
      for (int k = j + 1; k < n_; ++k) {
        Rational det = dx * (points[k].y - points[i].y) - dy * (points[k].x - points[i].x);
        set(i, j, k, sgn(det));
      }
    }
  }
}

OrderType OrderType::extended(std::span<const std::int8_t> pair_signs) const {
  OrderType out;
  out.n_ = n_ + 1;
  out.table_.assign(static_cast<std::size_t>(out.n_) * out.n_ * out.n_, 0);
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      for (int k = j + 1; k < n_; ++k) out.set(i, j, k, sign(i, j, k));
    }
  }
  std::size_t t = 0;
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) out.set(i, j, n_, pair_signs[t++]);
  }
  return out;
}

bool OrderType::has_collinear_triple() const {
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      for (int k = j + 1; k < n_; ++k) {
        if (sign(i, j, k) == 0) return true;
      }
    }
  }
  return false;
}

std::vector<std::int8_t> OrderType::triple_signature() const {
  std::vector<std::int8_t> sig;
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      for (int k = j + 1; k < n_; ++k) sig.push_back(static_cast<std::int8_t>(sign(i, j, k)));
    }
  }
  return sig;
}

namespace {

// A point of the subset is a hull vertex iff it lies in no triangle of three
// other subset points (Caratheodory, general position).
bool is_hull_vertex(const OrderType& ot, std::span<const int> subset, int p) {
  const std::size_t m = subset.size();
  for (std::size_t a = 0; a < m; ++a) {
    if (subset[a] == p) continue;
    for (std::size_t b = a + 1; b < m; ++b) {
      if (subset[b] == p) continue;
      for (std::size_t c = b + 1; c < m; ++c) {
        if (subset[c] == p) continue;
        if (ot.in_triangle(p, subset[a], subset[b], subset[c])) return false;
      }
    }
  }
  return true;
}

}  // namespace

std::vector<int> hull_indices(const OrderType& ot, std::span<const int> subset) {
  std::vector<int> hull;
  if (subset.size() <= 2) {
    hull.assign(subset.begin(), subset.end());
    std::sort(hull.begin(), hull.end());
    return hull;
  }
  for (int p : subset) {
    if (is_hull_vertex(ot, subset, p)) hull.push_back(p);
  }
  std::sort(hull.begin(), hull.end());
  // All other hull vertices lie within a half-turn seen from a hull vertex,
  // so the orientation test is a strict weak order around hull[0].
  const int pivot = hull.front();
  std::sort(hull.begin() + 1, hull.end(),
            [&](int a, int b) { return ot.sign(pivot, a, b) > 0; });
  return hull;
}

std::vector<std::vector<int>> layer_indices(const OrderType& ot) {
  std::vector<int> remaining(ot.size());
  for (int i = 0; i < ot.size(); ++i) remaining[i] = i;
  std::vector<std::vector<int>> layers;
  while (!remaining.empty()) {
    std::vector<int> layer = hull_indices(ot, remaining);
    std::vector<int> rest;
    for (int p : remaining) {
      if (std::find(layer.begin(), layer.end(), p) == layer.end()) rest.push_back(p);
    }
    layers.push_back(std::move(layer));
    remaining = std::move(rest);
  }
  return layers;
}

bool in_convex_position(const OrderType& ot, std::span<const int> subset) {
  if (subset.size() <= 3) return true;
  for (int p : subset) {
    if (!is_hull_vertex(ot, subset, p)) return false;
  }
  return true;
}

bool inside_convex(const OrderType& ot, std::span<const int> ccw_polygon, int q) {
  const std::size_t m = ccw_polygon.size();
  if (m < 3) return false;
  for (std::size_t i = 0; i < m; ++i) {
    if (ot.sign(ccw_polygon[i], ccw_polygon[(i + 1) % m], q) <= 0) return false;
  }
  return true;
}

}  // namespace esg
