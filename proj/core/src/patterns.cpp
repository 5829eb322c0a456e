#include "esgame/patterns.hpp"

#include <algorithm>
#include <stdexcept>

#include "esgame/error.hpp"
#include "esgame/hull.hpp"
#include "esgame/regions.hpp"

namespace esg {

std::string to_string(const LayerType& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.sizes.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(t.sizes[i]);
  }
  return s + ")";
}

LayerType layer_type(const OrderType& ot) {
  LayerType t;
  for (const auto& layer : layer_indices(ot)) t.sizes.push_back(static_cast<int>(layer.size()));
  return t;
}

LayerType layer_type(std::span<const Point> points) {
  LayerType t;
  for (const auto& layer : convex_layers(points)) t.sizes.push_back(static_cast<int>(layer.size()));
  return t;
}

bool is_convex_position(std::span<const Point> points) {
  return convex_hull(points).size() == points.size();
}

std::optional<GonWitness> find_convex_kgon(const OrderType& ot, int k, bool require_empty,
                                           int must_include) {
  const int n = ot.size();
  std::optional<GonWitness> found;
  std::vector<int> subset(k);

  auto check = [&](std::span<const int> s) {
    if (!in_convex_position(ot, s)) return false;
    std::vector<int> hull = hull_indices(ot, s);
    bool empty = true;
    for (int q = 0; q < n && empty; ++q) {
      if (std::find(s.begin(), s.end(), q) != s.end()) continue;
      if (inside_convex(ot, hull, q)) empty = false;
    }
    if (require_empty && !empty) return false;
    found = GonWitness{std::move(hull), {}, empty};
    return true;
  };

  if (must_include < 0) {
    for_each_subset(n, k, check);
    return found;
  }
  std::vector<int> others;
  for (int i = 0; i < n; ++i) {
    if (i != must_include) others.push_back(i);
  }
  for_each_subset(n - 1, k - 1, [&](std::span<const int> s) {
    for (int i = 0; i < k - 1; ++i) subset[i] = others[s[i]];
    subset[k - 1] = must_include;
    std::sort(subset.begin(), subset.end());
    return check(subset);
  });
  return found;
}

namespace {

std::optional<GonWitness> with_vertices(std::optional<GonWitness> w, std::span<const Point> points) {
  if (w) {
    for (int i : w->indices) w->vertices.push_back(points[i]);
  }
  return w;
}

}  // namespace

std::optional<GonWitness> find_convex_5gon(std::span<const Point> points) {
  require_general_position(points);
  return with_vertices(find_convex_kgon(OrderType(points), 5, false), points);
}

std::optional<GonWitness> find_empty_convex_5gon(std::span<const Point> points) {
  require_general_position(points);
  return with_vertices(find_convex_kgon(OrderType(points), 5, true), points);
}

std::vector<U4Gon> enumerate_u4gons(std::span<const Point> points, int from_first,
                                    int from_second) {
  if (from_first < 0 || from_second < 0 || from_first + from_second != 4) {
    throw Error(ErrorCode::InvalidArgument, "U(i,j) needs i + j = 4");
  }
  require_general_position(points);
  const OrderType ot(points);
  const auto layers = layer_indices(ot);
  if (layers.size() < 2) {
    throw Error(ErrorCode::LayerCountMismatch, "U(i,j) needs at least two convex layers");
  }
  std::vector<int> first = layers[0], second = layers[1];
  std::sort(first.begin(), first.end());
  std::sort(second.begin(), second.end());

  std::vector<U4Gon> out;
  const int n = ot.size();
  for_each_subset(static_cast<int>(first.size()), from_first, [&](std::span<const int> a) {
    for_each_subset(static_cast<int>(second.size()), from_second, [&](std::span<const int> b) {
      std::vector<int> quad;
      for (int i : a) quad.push_back(first[i]);
      for (int i : b) quad.push_back(second[i]);
      if (!in_convex_position(ot, quad)) return false;
      std::vector<int> hull = hull_indices(ot, quad);
      U4Gon g;
      std::copy(hull.begin(), hull.end(), g.indices.begin());
      g.empty = true;
      for (int q = 0; q < n && g.empty; ++q) {
        if (std::find(quad.begin(), quad.end(), q) == quad.end() && inside_convex(ot, hull, q)) {
          g.empty = false;
        }
      }
      out.push_back(g);
      return false;
    });
    return false;
  });
  return out;
}

std::string_view to_string(ConfigurationLabel label) {
  switch (label) {
    case ConfigurationLabel::Config4:
      return "4";
    case ConfigurationLabel::Config5_1:
      return "5.1";
    case ConfigurationLabel::Config5_2:
      return "5.2";
    case ConfigurationLabel::Config6_1:
      return "6.1";
    case ConfigurationLabel::Config6_2:
      return "6.2";
    case ConfigurationLabel::Config7_1:
      return "7.1";
    case ConfigurationLabel::Config7_2:
      return "7.2";
    case ConfigurationLabel::Config8:
      return "8";
    case ConfigurationLabel::Other:
      return "other";
  }
  return "other";
}

namespace {

class Classifier {
 public:
  explicit Classifier(std::span<const Point> points)
      : pts_(points), ot_(points), layers_(layer_indices(ot_)) {
    for (const auto& l : layers_) sizes_.push_back(static_cast<int>(l.size()));
  }

  ConfigurationLabel run() const {
    switch (pts_.size()) {
      case 4:
        if (sizes_ == std::vector<int>{4} && parallelogram(layers_[0])) {
          return ConfigurationLabel::Config4;
        }
        break;
      case 5:
        if (sizes_ == std::vector<int>{4, 1}) return five();
        break;
      case 6:
        if (sizes_ == std::vector<int>{4, 2}) return six();
        break;
      case 7:
        if (sizes_ == std::vector<int>{3, 4}) {
          if (parallelogram(layers_[1]) && distinct_i_regions(layers_[1], layers_[0])) {
            return ConfigurationLabel::Config7_1;
          }
        } else if (sizes_ == std::vector<int>{4, 3}) {
          if (!find_convex_kgon(ot_, 5, true)) return ConfigurationLabel::Config7_2;
        }
        break;
      case 8:
        if (sizes_ == std::vector<int>{4, 4} && distinct_i_regions(layers_[1], layers_[0])) {
          return ConfigurationLabel::Config8;
        }
        break;
      default:
        break;
    }
    return ConfigurationLabel::Other;
  }

 private:
  const Point& p(int i) const { return pts_[i]; }

  // Four points taken in cyclic order.
  bool parallelogram(const std::vector<int>& q) const {
    return p(q[0]) + p(q[2]) == p(q[1]) + p(q[3]);
  }

  // Any pairing of the four points into diagonals with a common midpoint.
  bool parallelogram_any_order(int a, int b, int c, int d) const {
    return p(a) + p(b) == p(c) + p(d) || p(a) + p(c) == p(b) + p(d) ||
           p(a) + p(d) == p(b) + p(c);
  }

  ConfigurationLabel five() const {
    const auto& hull = layers_[0];
    const int inner = layers_[1][0];
    const bool five_one = parallelogram(hull);
    bool five_two = false;
    for (int skip = 0; skip < 4 && !five_two; ++skip) {
      int rest[3], m = 0;
      for (int k = 0; k < 4; ++k) {
        if (k != skip) rest[m++] = hull[k];
      }
      five_two = parallelogram_any_order(rest[0], rest[1], rest[2], inner);
    }
    if (five_one && five_two) {
      throw std::logic_error("configuration 5.1 and 5.2 hold simultaneously");
    }
    if (five_one) return ConfigurationLabel::Config5_1;
    if (five_two) return ConfigurationLabel::Config5_2;
    return ConfigurationLabel::Other;
  }

  // Index k of the diagonal triangle on hull side (q_k, q_k+1) containing x.
  int diagonal_triangle(const std::vector<int>& q, int x) const {
    for (int k = 0; k < 4; ++k) {
      const int a = q[k], b = q[(k + 1) % 4], c = q[(k + 2) % 4], d = q[(k + 3) % 4];
      if (ot_.sign(a, c, x) == ot_.sign(a, c, b) && ot_.sign(b, d, x) == ot_.sign(b, d, a)) {
        return k;
      }
    }
    return -1;
  }

  ConfigurationLabel six() const {
    const auto& q = layers_[0];
    const int e = layers_[1][0], f = layers_[1][1];
    const int te = diagonal_triangle(q, e), tf = diagonal_triangle(q, f);
    if (te < 0 || tf < 0 || (te + 2) % 4 != tf) return ConfigurationLabel::Other;
    const Point d = p(f) - p(e);
    Point side[4];
    for (int k = 0; k < 4; ++k) side[k] = p(q[(k + 1) % 4]) - p(q[k]);

    if (parallelogram(q)) {
      for (const Point& s : side) {
        if (cross(d, s) == 0) return ConfigurationLabel::Config6_1;
      }
      return ConfigurationLabel::Other;
    }
    const bool par02 = cross(side[0], side[2]) == 0;
    const bool par13 = cross(side[1], side[3]) == 0;
    if (par02 == par13) return ConfigurationLabel::Other;
    const Point& s = par02 ? side[0] : side[1];
    if (cross(d, s) == 0) return ConfigurationLabel::Config6_2;
    return ConfigurationLabel::Other;
  }

  // Every outer point in an I region of the inner 4-gon, no two hiding the
  // same vertex.
  bool distinct_i_regions(const std::vector<int>& inner, const std::vector<int>& outer) const {
    if (inner.size() != 4) return false;
    const std::array<int, 4> quad{inner[0], inner[1], inner[2], inner[3]};
    std::array<bool, 4> used{};
    for (int x : outer) {
      const RegionInfo info = region_info(ot_, quad, x);
      if (info.region != RegionClass::I || used[info.hidden[0]]) return false;
      used[info.hidden[0]] = true;
    }
    return true;
  }

  std::span<const Point> pts_;
  OrderType ot_;
  std::vector<std::vector<int>> layers_;
  std::vector<int> sizes_;
};

}  // namespace

ConfigurationLabel classify_configuration(std::span<const Point> points) {
  if (points.size() < 4 || points.size() > 8) return ConfigurationLabel::Other;
  require_general_position(points);
  return Classifier(points).run();
}

}  // namespace esg
