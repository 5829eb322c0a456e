#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "esgame/patterns.hpp"
#include "esgame/point.hpp"
#include "esgame/variant.hpp"

namespace esg {

struct GameStatus {
  bool finished = false;
  int loser = 0;                // 1 or 2 once finished
  std::vector<int> witness;     // move indices of the completed polygon, CCW

  friend bool operator==(const GameStatus&, const GameStatus&) = default;
};

struct GameState {
  Variant variant = Variant::Convex;
  std::vector<Point> moves;
  GameStatus status;

  int step() const { return static_cast<int>(moves.size()); }
  // Player who places the next point.
  int to_move() const { return moves.size() % 2 == 0 ? 1 : 2; }

  friend bool operator==(const GameState&, const GameState&) = default;
};

struct MoveOutcome {
  bool accepted = false;
  int step = 0;
  GameStatus status;
  std::optional<ConfigurationLabel> label;  // for 4 <= step <= 8
  std::optional<Point> engine_reply;
};

GameState new_game(Variant v);

// Places p for the player to move. The mover loses as soon as the variant's
// polygon appears. Throws Error{GameAlreadyFinished}, Error{DuplicatePoint}
// or Error{GeneralPositionViolation}; the state is untouched on error.
MoveOutcome apply_move(GameState& state, const Point& p);

nlohmann::ordered_json trace_to_json(const GameState& state);
std::string serialize_trace(const GameState& state);

// Replays the moves through the referee. Throws Error{MalformedTrace} for
// schema problems and Error{InvariantViolation} for illegal move sequences or
// a status that does not match the replay.
GameState trace_from_json(const nlohmann::json& j);
GameState deserialize_trace(std::string_view text);

nlohmann::ordered_json outcome_to_json(const MoveOutcome& outcome);
nlohmann::ordered_json status_to_json(const GameStatus& status);

}  // namespace esg
