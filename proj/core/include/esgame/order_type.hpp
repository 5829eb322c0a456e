#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "esgame/point.hpp"

namespace esg {

// All pairs (i, j), i < j, in lexicographic order. Line and sign vectors
// throughout the library are indexed by position in this list.
std::vector<std::pair<int, int>> point_pairs(int n);

// Orientation table of a finite point sequence: sign(i, j, k) is the
// orientation of (p_i, p_j, p_k) as -1, 0 or +1. Everything that depends only
// on the combinatorial type of a point set (hulls, layers, convex position,
// emptiness) is computed from this table without touching coordinates.
class OrderType {
 public:
  OrderType() = default;
  explicit OrderType(std::span<const Point> points);

  int size() const { return n_; }

  int sign(int i, int j, int k) const {
    return table_[(static_cast<std::size_t>(i) * n_ + j) * n_ + k];
  }

  // Copy with one appended point q, where pair_signs[t] is the orientation of
  // (p_i, p_j, q) for the t-th pair of point_pairs(size()).
  OrderType extended(std::span<const std::int8_t> pair_signs) const;

  // Strictly inside triangle (a, b, c).
  bool in_triangle(int p, int a, int b, int c) const {
    const int s = sign(a, b, c);
    return s != 0 && sign(a, b, p) == s && sign(b, c, p) == s && sign(c, a, p) == s;
  }

  bool has_collinear_triple() const;

  // Signs of all triples i < j < k, in order; used as a memo key.
  std::vector<std::int8_t> triple_signature() const;

 private:
  void set(int i, int j, int k, int s);

  int n_ = 0;
  std::vector<std::int8_t> table_;
};

// Hull vertices of the given subset, counterclockwise, starting from the
// smallest index on the hull. Requires the subset in general position.
std::vector<int> hull_indices(const OrderType& ot, std::span<const int> subset);

// Convex layers as index lists (outermost first, each counterclockwise).
std::vector<std::vector<int>> layer_indices(const OrderType& ot);

bool in_convex_position(const OrderType& ot, std::span<const int> subset);

// Strictly inside the convex polygon given counterclockwise.
bool inside_convex(const OrderType& ot, std::span<const int> ccw_polygon, int q);

// Calls fn(subset) for every k-subset of {0..n-1} in lexicographic order.
// Stops early and returns true as soon as fn returns true.
template <class Fn>
bool for_each_subset(int n, int k, Fn&& fn) {
  if (k < 0 || k > n) return false;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (fn(std::span<const int>(idx))) return true;
    int pos = k - 1;
    while (pos >= 0 && idx[pos] == n - k + pos) --pos;
    if (pos < 0) return false;
    ++idx[pos];
    for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
  }
}

}  // namespace esg
