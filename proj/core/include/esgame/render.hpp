#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "esgame/patterns.hpp"
#include "esgame/point.hpp"
#include "esgame/referee.hpp"

namespace esg {

// What the board shows on top of the points: convex layers, the label and,
// while the game runs, the cells where the next point would lose.
struct OverlayBundle {
  int step = 0;
  std::optional<ConfigurationLabel> label;
  std::vector<std::vector<Point>> layers;
  std::vector<std::vector<Point>> losing_regions;  // clipped cells, CCW
  std::size_t cell_count = 0;
};

OverlayBundle compute_overlay(const GameState& state);
nlohmann::ordered_json overlay_to_json(const OverlayBundle& overlay);

// Deterministic SVG of the position: move-numbered points (class "pt"),
// layer outlines, optional losing-region fills and the witness polygon of a
// finished game.
std::string render_svg(const GameState& state, const OverlayBundle* overlay = nullptr);

}  // namespace esg
