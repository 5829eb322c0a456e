#include "esgame/strategy.hpp"

#include <algorithm>
#include <map>

#include "esgame/error.hpp"
#include "esgame/json.hpp"
#include "esgame/order_type.hpp"

namespace esg {

namespace {

std::vector<Point> with_point(std::span<const Point> points, const Point& p) {
  std::vector<Point> out(points.begin(), points.end());
  out.push_back(p);
  return out;
}

bool keeps_general_position(std::span<const Point> points, const Point& p) {
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i] == p) return false;
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (orientation(points[i], points[j], p) == Orientation::Collinear) return false;
    }
  }
  return true;
}

bool loses(std::span<const Point> points, const Point& p, Variant v) {
  const auto next = with_point(points, p);
  return find_losing_polygon(OrderType(next), v, 5, static_cast<int>(points.size())).has_value();
}

// A legal move that keeps the mover alive.
bool safe_move(std::span<const Point> points, const Point& p, Variant v) {
  return keeps_general_position(points, p) && !loses(points, p, v);
}

}  // namespace

Point construct_second(const Point& first) { return first + Point(1, 0); }

Point construct_parallelogram(std::span<const Point> triangle) {
  if (triangle.size() != 3) throw Error(ErrorCode::InvalidArgument, "expected three points");
  const Point &a = triangle[0], &b = triangle[1], &c = triangle[2];
  if (orientation(a, b, c) == Orientation::Collinear) {
    throw Error(ErrorCode::DegenerateInput, "triangle is degenerate");
  }
  Point best = a + b - c;
  for (const Point& q : {a + c - b, b + c - a}) {
    if (lex_less(q, best)) best = q;
  }
  return best;
}

namespace {

struct Segment {
  std::optional<Rational> lo, hi;  // empty means unbounded
  std::vector<std::pair<Rational, Rational>> pieces;  // bounded intervals inside
};

class SixthSearch {
 public:
  SixthSearch(std::span<const Point> five, ConfigurationLabel target)
      : five_(five), target_(target) {}

  bool feasible(const Point& f) const {
    if (!keeps_general_position(five_, f)) return false;
    const auto six = with_point(five_, f);
    if (classify_configuration(six) != target_) return false;
    return !find_convex_kgon(OrderType(six), 5, false, 5);
  }

  // Feasible segments along e + t d, each a maximal run of feasible open
  // intervals between consecutive breakpoints.
  std::vector<Segment> scan(const Point& e, const Point& d) const {
    std::vector<Rational> ts{Rational(0)};
    for (std::size_t i = 0; i < five_.size(); ++i) {
      for (std::size_t j = i + 1; j < five_.size(); ++j) {
        const Point dir = five_[j] - five_[i];
        const Rational a = cross(dir, e - five_[i]);
        const Rational b = cross(dir, d);
        if (b == 0) {
          if (a == 0) return {};  // the line itself is spanned by two points
          continue;
        }
        ts.push_back(-a / b);
      }
    }
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());

    std::vector<Segment> out;
    bool open = false;
    auto at = [&](const Rational& t) { return e + t * d; };
    for (std::size_t k = 0; k <= ts.size(); ++k) {
      std::optional<Rational> lo, hi;
      if (k > 0) lo = ts[k - 1];
      if (k < ts.size()) hi = ts[k];
      Rational sample;
      if (lo && hi) {
        sample = (*lo + *hi) / 2;
      } else if (lo) {
        sample = *lo + 1;
      } else {
        sample = *hi - 1;
      }
      if (!feasible(at(sample))) {
        open = false;
        continue;
      }
      if (!open) {
        out.push_back(Segment{lo, hi, {}});
        open = true;
      } else {
        out.back().hi = hi;
      }
      if (lo && hi) out.back().pieces.emplace_back(*lo, *hi);
    }
    return out;
  }

 private:
  std::span<const Point> five_;
  ConfigurationLabel target_;
};

Rational squared_length(const Point& d) { return d.x * d.x + d.y * d.y; }

}  // namespace

Point construct_sixth(std::span<const Point> five, Variant v) {
  const ConfigurationLabel label = classify_configuration(five);
  if (label != ConfigurationLabel::Config5_1 && label != ConfigurationLabel::Config5_2) {
    throw Error(ErrorCode::InvalidArgument, "position is not configuration 5.1 or 5.2");
  }
  const OrderType ot(five);
  const auto layers = layer_indices(ot);
  const auto& hull = layers[0];
  const int inner = layers[1][0];

  int e = inner;
  std::vector<int> par = hull;
  ConfigurationLabel target = ConfigurationLabel::Config6_1;
  if (label == ConfigurationLabel::Config5_2) {
    target = ConfigurationLabel::Config6_2;
    for (int skip = 0; skip < 4; ++skip) {
      std::vector<int> quad;
      for (int k = 0; k < 4; ++k) {
        if (k != skip) quad.push_back(hull[k]);
      }
      quad.push_back(inner);
      const auto cyc = hull_indices(ot, quad);
      if (cyc.size() == 4 && five[cyc[0]] + five[cyc[2]] == five[cyc[1]] + five[cyc[3]]) {
        e = hull[skip];
        par = cyc;
        break;
      }
    }
  }

  const SixthSearch search(five, target);
  const Point& ep = five[e];
  struct Candidate {
    Rational weight;
    Point point;
  };
  std::vector<Candidate> bounded;
  std::vector<Point> fallback;
  for (const Point& d : {five[par[1]] - five[par[0]], five[par[2]] - five[par[1]]}) {
    const Rational dd = squared_length(d);
    for (const Segment& s : search.scan(ep, d)) {
      if (s.lo && s.hi) {
        const Rational len = *s.hi - *s.lo;
        bounded.push_back({len * len * dd, ep + ((*s.lo + *s.hi) / 2) * d});
        // Longest bounded piece, used when the segment midpoint sits on a
        // breakpoint.
        const auto longest = std::max_element(
            s.pieces.begin(), s.pieces.end(),
            [](const auto& a, const auto& b) { return a.second - a.first < b.second - b.first; });
        if (longest != s.pieces.end()) {
          fallback.push_back(ep + ((longest->first + longest->second) / 2) * d);
        }
      } else if (s.lo) {
        fallback.push_back(ep + (*s.lo + 1) * d);
      } else if (s.hi) {
        fallback.push_back(ep + (*s.hi - 1) * d);
      }
    }
  }
  std::stable_sort(bounded.begin(), bounded.end(),
                   [](const Candidate& a, const Candidate& b) { return a.weight > b.weight; });
  for (const Candidate& c : bounded) {
    if (search.feasible(c.point) && safe_move(five, c.point, v)) return c.point;
  }
  for (const Point& p : fallback) {
    if (search.feasible(p) && safe_move(five, p, v)) return p;
  }

  for (const Cell& cell : arrangement_cells(five)) {
    const auto six = with_point(five, cell.representative);
    const auto got = classify_configuration(six);
    if ((got == ConfigurationLabel::Config6_1 || got == ConfigurationLabel::Config6_2) &&
        !loses(five, cell.representative, v)) {
      return cell.representative;
    }
  }
  throw Error(ErrorCode::NoFeasiblePoint, "no sixth point reaches configuration 6.1 or 6.2");
}

Point construct_eighth(std::span<const Point> seven, Variant v) {
  const ConfigurationLabel label = classify_configuration(seven);
  if (label != ConfigurationLabel::Config7_1 && label != ConfigurationLabel::Config7_2) {
    throw Error(ErrorCode::InvalidArgument, "position is not configuration 7.1 or 7.2");
  }
  auto cells = arrangement_cells(seven);
  std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) {
    return lex_less(a.representative, b.representative);
  });
  const OrderType ot(seven);
  for (const Cell& cell : cells) {
    const OrderType next = ot.extended(cell.signs);
    if (find_losing_polygon(next, v, 5, 7)) continue;
    const auto eight = with_point(seven, cell.representative);
    if (classify_configuration(eight) == ConfigurationLabel::Config8) return cell.representative;
  }
  throw Error(ErrorCode::NoFeasiblePoint, "no cell of the position yields configuration 8");
}

CellSplit split_cells(std::span<const Point> points, Variant v, int k) {
  CellSplit split;
  split.cells = arrangement_cells(points);
  const OrderType ot(points);
  const int n = static_cast<int>(points.size());
  split.losing.reserve(split.cells.size());
  for (const Cell& cell : split.cells) {
    const bool lost = find_losing_polygon(ot.extended(cell.signs), v, k, n).has_value();
    split.losing.push_back(lost);
    split.losing_count += lost;
  }
  return split;
}

std::vector<Cell> losing_cells(std::span<const Point> points, Variant v) {
  require_general_position(points);
  CellSplit split = split_cells(points, v);
  std::vector<Cell> out;
  for (std::size_t i = 0; i < split.cells.size(); ++i) {
    if (split.losing[i]) out.push_back(std::move(split.cells[i]));
  }
  return out;
}

namespace {

class Solver {
 public:
  Solver(Variant v, int k, int max_step, const SolveOptions& options)
      : v_(v), k_(k), max_step_(max_step), victim_(max_step % 2 == 1 ? 1 : 2), options_(options) {}

  bool solve(std::vector<Point>& pts, CertificateNode* node) {
    const int step = static_cast<int>(pts.size()) + 1;
    if (step > max_step_) return fail(pts);
    if (++nodes_ > options_.node_budget) {
      throw Error(ErrorCode::DepthExceeded,
                  "node budget of " + std::to_string(options_.node_budget) + " exhausted");
    }
    const bool use_memo = !options_.policy && !options_.keep_tree;
    std::vector<std::int8_t> key;
    if (use_memo) {
      key = OrderType(pts).triple_signature();
      key.push_back(static_cast<std::int8_t>(pts.size()));
      if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    }
    const bool result = expand(pts, node, step);
    if (use_memo) memo_.emplace(std::move(key), result);
    return result;
  }

  std::size_t nodes() const { return nodes_; }
  int deepest() const { return deepest_; }
  std::vector<Point>& refutation() { return refutation_; }

 private:
  bool expand(std::vector<Point>& pts, CertificateNode* node, int step) {
    const int mover = step % 2 == 1 ? 1 : 2;
    const CellSplit split = split_cells(pts, v_, k_);
    const bool stuck = split.losing_count == split.cells.size();

    if (mover == victim_) {
      if (stuck) {
        deepest_ = std::max(deepest_, step);
        if (node) {
          node->losing_cells = split.cells.size();
          node->forced = split.cells.front().representative;
          auto all = with_point(pts, *node->forced);
          node->witness = find_losing_polygon(OrderType(all), v_, k_, static_cast<int>(pts.size()));
        }
        return true;
      }
      for (std::size_t i = 0; i < split.cells.size(); ++i) {
        if (split.losing[i]) continue;
        const Point& p = split.cells[i].representative;
        if (step == max_step_) {
          pts.push_back(p);
          const bool r = fail(pts);
          pts.pop_back();
          return r;
        }
        CertificateNode* child = push_child(node, step, p);
        pts.push_back(p);
        const bool ok = solve(pts, child);
        pts.pop_back();
        if (!ok) return false;
      }
      return true;
    }

    if (stuck) return fail(pts);
    if (options_.policy) {
      Point p;
      try {
        p = options_.policy(pts);
      } catch (const Error&) {
        return fail(pts);
      }
      if (!keeps_general_position(pts, p)) return fail(pts);
      pts.push_back(p);
      const bool lost = find_losing_polygon(OrderType(pts), v_, k_, static_cast<int>(pts.size()) - 1)
                            .has_value();
      bool ok = false;
      if (lost) {
        fail(pts);
      } else {
        ok = solve(pts, push_child(node, step, p));
      }
      pts.pop_back();
      return ok;
    }
    for (std::size_t i = 0; i < split.cells.size(); ++i) {
      if (split.losing[i]) continue;
      const Point& p = split.cells[i].representative;
      CertificateNode* child = push_child(node, step, p);
      pts.push_back(p);
      const bool ok = solve(pts, child);
      pts.pop_back();
      if (ok) {
        refutation_.clear();
        if (node) {
          CertificateNode keep = std::move(node->children.back());
          node->children.clear();
          node->children.push_back(std::move(keep));
        }
        return true;
      }
    }
    return false;
  }

  CertificateNode* push_child(CertificateNode* node, int step, const Point& p) {
    if (!node) return nullptr;
    node->children.push_back(CertificateNode{step, p, {}, 0, std::nullopt, std::nullopt});
    return &node->children.back();
  }

  bool fail(const std::vector<Point>& pts) {
    if (refutation_.empty()) refutation_ = pts;
    return false;
  }

  Variant v_;
  int k_;
  int max_step_;
  int victim_;
  const SolveOptions& options_;
  std::size_t nodes_ = 0;
  int deepest_ = 0;
  std::map<std::vector<std::int8_t>, bool> memo_;
  std::vector<Point> refutation_;
};

}  // namespace

SolveResult solve_and_or(std::span<const Point> points, Variant v, int k, int max_step,
                         const SolveOptions& options) {
  if (k < 3 || k > 5) throw Error(ErrorCode::InvalidArgument, "k must be 3, 4 or 5");
  require_general_position(points);
  if (find_losing_polygon(OrderType(points), v, k)) {
    throw Error(ErrorCode::InvalidArgument, "position already contains a losing polygon");
  }
  Solver solver(v, k, max_step, options);
  std::vector<Point> pts(points.begin(), points.end());
  SolveResult result;
  result.max_step = max_step;
  result.loser = max_step % 2 == 1 ? 1 : 2;
  std::optional<CertificateNode> root;
  if (options.keep_tree) {
    root = CertificateNode{};
    root->step = static_cast<int>(pts.size());
    if (!pts.empty()) root->move = pts.back();
  }
  result.certified = solver.solve(pts, root ? &*root : nullptr);
  result.nodes = solver.nodes();
  result.deepest = solver.deepest();
  if (result.certified) {
    result.certificate = std::move(root);
  } else {
    result.refutation = std::move(solver.refutation());
  }
  return result;
}

int game_length(int k, Variant v, int step_limit, std::size_t node_budget) {
  SolveOptions options;
  options.node_budget = node_budget;
  for (int max_step = 1; max_step <= step_limit; ++max_step) {
    if (solve_and_or({}, v, k, max_step, options).certified) return max_step;
  }
  throw Error(ErrorCode::DepthExceeded,
              "no forced end within " + std::to_string(step_limit) + " steps");
}

Point choose_move(std::span<const Point> moves, Variant v) {
  const std::size_t n = moves.size();
  if (n % 2 == 0) throw Error(ErrorCode::InvalidArgument, "it is not player 2's turn");
  require_general_position(moves);
  if (find_losing_polygon(OrderType(moves), v)) {
    throw Error(ErrorCode::GameAlreadyFinished, "position already contains a losing polygon");
  }

  std::optional<Point> fast;
  try {
    if (n == 1) {
      fast = construct_second(moves[0]);
    } else if (n == 3) {
      fast = construct_parallelogram(moves);
    } else if (n == 5 || n == 7) {
      const auto label = classify_configuration(moves);
      if (label == ConfigurationLabel::Config5_1 || label == ConfigurationLabel::Config5_2) {
        fast = construct_sixth(moves, v);
      } else if (label == ConfigurationLabel::Config7_1 || label == ConfigurationLabel::Config7_2) {
        fast = construct_eighth(moves, v);
      }
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NoFeasiblePoint) throw;
  }
  if (fast && safe_move(moves, *fast, v)) return *fast;

  // Cell search: any non-losing cell from which the strategy forces player 1
  // to complete the polygon.
  int max_step = std::max<int>(9, static_cast<int>(n) + 2);
  if (max_step % 2 == 0) ++max_step;
  SolveOptions options;
  options.policy = [v](std::span<const Point> pts) { return choose_move(pts, v); };
  options.node_budget = 200'000;
  const CellSplit split = split_cells(moves, v);
  for (std::size_t i = 0; i < split.cells.size(); ++i) {
    if (split.losing[i]) continue;
    const auto next = with_point(moves, split.cells[i].representative);
    try {
      if (solve_and_or(next, v, 5, max_step, options).certified) {
        return split.cells[i].representative;
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DepthExceeded) throw;
    }
  }
  throw Error(ErrorCode::NoWinningMove, "no move certified to win from this position");
}

nlohmann::json certificate_to_json(const CertificateNode& node) {
  nlohmann::json j;
  j["step"] = node.step;
  if (node.step > 0) j["move"] = node.move;
  if (node.forced) {
    j["losing_cells"] = node.losing_cells;
    j["forced"] = *node.forced;
    if (node.witness) j["witness"] = node.witness->indices;
  }
  if (!node.children.empty()) {
    j["children"] = nlohmann::json::array();
    for (const auto& c : node.children) j["children"].push_back(certificate_to_json(c));
  }
  return j;
}

}  // namespace esg
