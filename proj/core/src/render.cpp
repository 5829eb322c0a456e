#include "esgame/render.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "esgame/hull.hpp"
#include "esgame/json.hpp"
#include "esgame/strategy.hpp"

namespace esg {

OverlayBundle compute_overlay(const GameState& state) {
  OverlayBundle o;
  o.step = state.step();
  if (o.step >= 4 && o.step <= 8) o.label = classify_configuration(state.moves);
  if (!state.moves.empty()) o.layers = convex_layers(state.moves);
  if (!state.status.finished) {
    const CellSplit split = split_cells(state.moves, state.variant);
    o.cell_count = split.cells.size();
    for (std::size_t i = 0; i < split.cells.size(); ++i) {
      if (split.losing[i]) o.losing_regions.push_back(split.cells[i].polygon);
    }
  }
  return o;
}

nlohmann::ordered_json overlay_to_json(const OverlayBundle& overlay) {
  nlohmann::ordered_json j;
  j["step"] = overlay.step;
  j["label"] = nullptr;
  if (overlay.label) j["label"] = to_string(*overlay.label);
  j["layers"] = nlohmann::ordered_json::array();
  for (const auto& layer : overlay.layers) {
    auto& arr = j["layers"].emplace_back(nlohmann::ordered_json::array());
    for (const Point& p : layer) arr.push_back(p);
  }
  j["losing_regions"] = nlohmann::ordered_json::array();
  for (const auto& poly : overlay.losing_regions) {
    auto& arr = j["losing_regions"].emplace_back(nlohmann::ordered_json::array());
    for (const Point& p : poly) arr.push_back(p);
  }
  j["cell_count"] = overlay.cell_count;
  return j;
}

namespace {

constexpr double kSize = 800.0;

class Frame {
 public:
  explicit Frame(const std::vector<Point>& pts) {
    if (pts.empty()) {
      lo_x_ = lo_y_ = -1;
      span_ = 2;
      return;
    }
    double x0 = to_double(pts[0].x), x1 = x0, y0 = to_double(pts[0].y), y1 = y0;
    for (const Point& p : pts) {
      x0 = std::min(x0, to_double(p.x));
      x1 = std::max(x1, to_double(p.x));
      y0 = std::min(y0, to_double(p.y));
      y1 = std::max(y1, to_double(p.y));
    }
    span_ = std::max({x1 - x0, y1 - y0, 1e-9});
    const double pad = 0.15 * span_;
    lo_x_ = (x0 + x1) / 2 - span_ / 2 - pad;
    lo_y_ = (y0 + y1) / 2 - span_ / 2 - pad;
    span_ += 2 * pad;
  }

  std::string xy(const Point& p) const {
    // Far-away clip vertices are pulled in so the numbers stay printable.
    const double x = std::clamp((to_double(p.x) - lo_x_) / span_ * kSize, -1e6, 1e6);
    const double y = std::clamp(kSize - (to_double(p.y) - lo_y_) / span_ * kSize, -1e6, 1e6);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f,%.2f", x, y);
    return buf;
  }

 private:
  double lo_x_ = 0, lo_y_ = 0, span_ = 1;
};

std::string points_attr(const Frame& f, const std::vector<Point>& poly) {
  std::string s;
  for (const Point& p : poly) {
    if (!s.empty()) s += ' ';
    s += f.xy(p);
  }
  return s;
}

}  // namespace

std::string render_svg(const GameState& state, const OverlayBundle* overlay) {
  const Frame frame(state.moves);
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 800\" width=\"800\" "
         "height=\"800\">\n";
  out << "<style>.losing{fill:#e8a0a0;fill-opacity:0.45;stroke:none}"
         ".layer{fill:none;stroke:#4a6fa5;stroke-width:1.5}"
         ".witness{fill:#f2d16b;fill-opacity:0.5;stroke:#b8860b;stroke-width:2}"
         ".pt{fill:#222}.p2{fill:#c0392b}.lbl{font:12px sans-serif}</style>\n";
  out << "<rect width=\"800\" height=\"800\" fill=\"#fcfcf7\"/>\n";

  if (overlay) {
    out << "<g id=\"overlay\">\n";
    for (const auto& poly : overlay->losing_regions) {
      out << "<polygon class=\"losing\" points=\"" << points_attr(frame, poly) << "\"/>\n";
    }
    out << "</g>\n";
  }

  out << "<g id=\"layers\">\n";
  if (!state.moves.empty()) {
    for (const auto& layer : convex_layers(state.moves)) {
      const char* tag = layer.size() >= 3 ? "polygon" : "polyline";
      out << "<" << tag << " class=\"layer\" points=\"" << points_attr(frame, layer) << "\"/>\n";
    }
  }
  out << "</g>\n";

  if (state.status.finished) {
    std::vector<Point> poly;
    for (int i : state.status.witness) poly.push_back(state.moves[i]);
    out << "<polygon class=\"witness\" points=\"" << points_attr(frame, poly) << "\"/>\n";
  }

  out << "<g id=\"points\">\n";
  for (std::size_t i = 0; i < state.moves.size(); ++i) {
    const std::string at = frame.xy(state.moves[i]);
    const auto comma = at.find(',');
    const std::string x = at.substr(0, comma), y = at.substr(comma + 1);
    out << "<circle class=\"pt" << (i % 2 == 1 ? " p2" : "") << "\" cx=\"" << x << "\" cy=\"" << y
        << "\" r=\"5\"/>";
    out << "<text class=\"lbl\" x=\"" << x << "\" y=\"" << y << "\" dx=\"7\" dy=\"-7\">" << i + 1
        << "</text>\n";
  }
  out << "</g>\n";

  std::string caption = std::string(to_string(state.variant)) + " game, step " +
                        std::to_string(state.step());
  if (state.status.finished) {
    caption += ", player " + std::to_string(state.status.loser) + " loses";
  } else if (overlay && overlay->label) {
    caption += ", configuration " + std::string(to_string(*overlay->label));
  }
  out << "<text class=\"lbl\" x=\"10\" y=\"790\">" << caption << "</text>\n";
  out << "</svg>\n";
  return out.str();
}

}  // namespace esg
