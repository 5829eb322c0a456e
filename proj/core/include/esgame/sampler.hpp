#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "esgame/arrangement.hpp"
#include "esgame/patterns.hpp"
#include "esgame/point.hpp"
#include "esgame/variant.hpp"

namespace esg {

using Rng = std::mt19937_64;

// n distinct integer points in [0, range)^2 with no three collinear.
std::vector<Point> random_general_position(int n, Rng& rng, long range = 1 << 12);

// A point strictly inside the cell: a random positive combination of the
// clipped polygon's vertices, rounded to a short dyadic.
Point random_point_in_cell(const Cell& cell, Rng& rng);

// Random player 1: a uniformly chosen cell that does not lose on the spot
// (any cell when every cell loses), then a random point inside it.
Point random_adversary_move(std::span<const Point> points, Variant v, Rng& rng);

struct StructuredSample {
  LayerType target;
  std::vector<Point> points;
  std::uint64_t seed = 0;
};

// Nested layers: the outer layer on a rational circle, each inner layer on a
// smaller rational circle around a random interior centre that fits inside
// the previous layer. Retries until the layer type matches; throws
// Error{SamplerFailure} after `attempts` misses or for signatures that cannot
// be nested (a layer of fewer than 3 points followed by another layer).
StructuredSample structured_sample(const LayerType& target, std::uint64_t seed,
                                   int attempts = 1000);

}  // namespace esg
