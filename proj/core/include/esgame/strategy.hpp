#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "esgame/arrangement.hpp"
#include "esgame/patterns.hpp"
#include "esgame/point.hpp"
#include "esgame/variant.hpp"

namespace esg {

// Player 2's fixed second move relative to the first point.
Point construct_second(const Point& first);

// Completion of the triangle to a parallelogram: the lexicographically
// smallest of A+B-C, A+C-B, B+C-A. Throws Error{DegenerateInput}.
Point construct_parallelogram(std::span<const Point> triangle);

// Sixth point for a configuration 5.1 or 5.2 position: on the line through the
// fifth point parallel to a side of the parallelogram, inside the feasible
// part of that line. Throws Error{NoFeasiblePoint}.
Point construct_sixth(std::span<const Point> five, Variant v);

// Eighth point turning a configuration 7.1 or 7.2 position into configuration
// 8 without a losing polygon: the first such cell in lexicographic order of
// representatives. Throws Error{NoFeasiblePoint}.
Point construct_eighth(std::span<const Point> seven, Variant v);

// Player 2's move for the position `moves` (odd length). Fast paths at steps
// 2, 4, 6, 8; anything else, or a fast path that fails validation, goes to a
// cell search certified by solve_and_or. Throws Error{NoWinningMove}.
Point choose_move(std::span<const Point> moves, Variant v);

// Cells whose representative, added to the position, completes the losing
// polygon of the variant.
std::vector<Cell> losing_cells(std::span<const Point> points, Variant v);

// Cells of the arrangement split by whether adding them loses.
struct CellSplit {
  std::vector<Cell> cells;
  std::vector<bool> losing;
  std::size_t losing_count = 0;
};
CellSplit split_cells(std::span<const Point> points, Variant v, int k = 5);

using MovePolicy = std::function<Point(std::span<const Point>)>;

struct SolveOptions {
  // Fixed reply for the winning side; without it every cell is tried.
  MovePolicy policy;
  std::size_t node_budget = 2'000'000;
  bool keep_tree = false;
};

// One placed point of a certificate. At a leaf the side to move has only
// losing cells; `forced` then holds one of them with its polygon.
struct CertificateNode {
  int step = 0;
  Point move;
  std::vector<CertificateNode> children;
  std::size_t losing_cells = 0;
  std::optional<Point> forced;
  std::optional<GonWitness> witness;
};

struct SolveResult {
  bool certified = false;
  // Player (1 or 2) who is forced to complete the polygon by max_step.
  int loser = 0;
  int max_step = 0;
  // Deepest step at which a certified line ends.
  int deepest = 0;
  std::size_t nodes = 0;
  std::optional<CertificateNode> certificate;  // when keep_tree
  std::vector<Point> refutation;               // a line that escapes max_step
};

// AND-OR search from `points`: the player who moves at max_step (by parity)
// must be forced to complete a losing k-gon at or before max_step. That
// player branches over every non-losing cell, the other side needs one good
// cell (or plays the policy). Memoized on the orientation table when no
// policy is set. Throws Error{DepthExceeded} when the node budget runs out.
SolveResult solve_and_or(std::span<const Point> points, Variant v, int k, int max_step,
                         const SolveOptions& options = {});

// Smallest step by which the game on k-gons is forced to end from the empty
// board, found by iterative deepening of solve_and_or.
int game_length(int k, Variant v, int step_limit = 12, std::size_t node_budget = 2'000'000);

nlohmann::json certificate_to_json(const CertificateNode& node);

}  // namespace esg
