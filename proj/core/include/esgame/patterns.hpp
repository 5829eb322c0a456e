#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "esgame/order_type.hpp"
#include "esgame/point.hpp"

namespace esg {

// Sizes of the convex layers, outermost first.
struct LayerType {
  std::vector<int> sizes;

  friend bool operator==(const LayerType&, const LayerType&) = default;
};

std::string to_string(const LayerType& t);
LayerType layer_type(std::span<const Point> points);
LayerType layer_type(const OrderType& ot);

struct GonWitness {
  std::vector<int> indices;     // into the input, counterclockwise
  std::vector<Point> vertices;  // filled by the Point overloads
  bool empty = false;           // no input point strictly inside
};

bool is_convex_position(std::span<const Point> points);

// Exhaustive over all 5-subsets in lexicographic index order; the first hit
// is returned. Throws Error{DegenerateInput} outside general position.
std::optional<GonWitness> find_convex_5gon(std::span<const Point> points);
std::optional<GonWitness> find_empty_convex_5gon(std::span<const Point> points);

// Generic search on an orientation table. With must_include >= 0 only
// subsets containing that index are examined.
std::optional<GonWitness> find_convex_kgon(const OrderType& ot, int k, bool require_empty,
                                           int must_include = -1);

struct U4Gon {
  std::array<int, 4> indices{};  // counterclockwise
  bool empty = false;
};

// 4-subsets in convex position drawn with `from_first` points of layer 1 and
// `from_second` points of layer 2. Throws Error{LayerCountMismatch} when the
// set has a single layer.
std::vector<U4Gon> enumerate_u4gons(std::span<const Point> points, int from_first,
                                    int from_second);

enum class ConfigurationLabel {
  Config4,
  Config5_1,
  Config5_2,
  Config6_1,
  Config6_2,
  Config7_1,
  Config7_2,
  Config8,
  Other,
};

std::string_view to_string(ConfigurationLabel label);

// Named configurations of the strategy tree. Requires general position
// (Error{DegenerateInput}); sets outside 4..8 points are Other.
ConfigurationLabel classify_configuration(std::span<const Point> points);

}  // namespace esg
