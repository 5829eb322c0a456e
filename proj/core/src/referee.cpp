#include "esgame/referee.hpp"

#include <algorithm>
#include <set>

#include "esgame/error.hpp"
#include "esgame/json.hpp"
#include "esgame/order_type.hpp"

namespace esg {

GameState new_game(Variant v) {
  GameState s;
  s.variant = v;
  return s;
}

MoveOutcome apply_move(GameState& state, const Point& p) {
  if (state.status.finished) {
    throw Error(ErrorCode::GameAlreadyFinished, "the game is already finished");
  }
  const auto& moves = state.moves;
  for (std::size_t i = 0; i < moves.size(); ++i) {
    if (moves[i] == p) {
      throw Error(ErrorCode::DuplicatePoint, to_string(p) + " is already on the board");
    }
  }
  for (std::size_t i = 0; i < moves.size(); ++i) {
    for (std::size_t j = i + 1; j < moves.size(); ++j) {
      if (orientation(moves[i], moves[j], p) == Orientation::Collinear) {
        throw Error(ErrorCode::GeneralPositionViolation,
                    to_string(p) + " is collinear with moves " + std::to_string(i + 1) + " and " +
                        std::to_string(j + 1));
      }
    }
  }
  const int mover = state.to_move();
  state.moves.push_back(p);
  const int last = state.step() - 1;
  if (auto w = find_losing_polygon(OrderType(state.moves), state.variant, 5, last)) {
    state.status = GameStatus{true, mover, w->indices};
  }

  MoveOutcome out;
  out.accepted = true;
  out.step = state.step();
  out.status = state.status;
  if (out.step >= 4 && out.step <= 8) out.label = classify_configuration(state.moves);
  return out;
}

nlohmann::ordered_json status_to_json(const GameStatus& status) {
  if (!status.finished) return "ongoing";
  nlohmann::ordered_json j;
  j["loser"] = status.loser;
  j["witness"] = status.witness;
  return j;
}

nlohmann::ordered_json trace_to_json(const GameState& state) {
  nlohmann::ordered_json j;
  j["variant"] = to_string(state.variant);
  j["moves"] = nlohmann::ordered_json::array();
  for (const Point& p : state.moves) j["moves"].push_back(p);
  j["status"] = status_to_json(state.status);
  return j;
}

std::string serialize_trace(const GameState& state) { return trace_to_json(state).dump(); }

namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorCode::MalformedTrace, what);
}

[[noreturn]] void violation(const std::string& what) {
  throw Error(ErrorCode::InvariantViolation, what);
}

}  // namespace

GameState trace_from_json(const nlohmann::json& j) {
  if (!j.is_object()) malformed("trace must be a JSON object");
  for (const char* field : {"variant", "moves", "status"}) {
    if (!j.contains(field)) malformed(std::string("trace lacks field '") + field + "'");
  }
  if (!j["variant"].is_string()) malformed("variant must be a string");
  Variant v;
  try {
    v = parse_variant(j["variant"].get<std::string>());
  } catch (const Error& e) {
    malformed(e.what());
  }
  if (!j["moves"].is_array()) malformed("moves must be an array");

  std::vector<Point> moves;
  for (const auto& m : j["moves"]) {
    try {
      moves.push_back(m.get<Point>());
    } catch (const Error& e) {
      malformed(std::string("bad move: ") + e.what());
    }
  }

  GameState state = new_game(v);
  for (std::size_t i = 0; i < moves.size(); ++i) {
    if (state.status.finished) violation("move " + std::to_string(i + 1) + " follows the end of the game");
    try {
      apply_move(state, moves[i]);
    } catch (const Error& e) {
      violation("move " + std::to_string(i + 1) + ": " + e.what());
    }
  }

  const auto& st = j["status"];
  if (st.is_string()) {
    if (st.get<std::string>() != "ongoing") malformed("status must be \"ongoing\" or an object");
    if (state.status.finished) violation("trace says ongoing but the last move completes a polygon");
    return state;
  }
  if (!st.is_object() || !st.contains("loser") || !st.contains("witness") ||
      !st["loser"].is_number_integer() || !st["witness"].is_array()) {
    malformed("finished status needs integer loser and witness array");
  }
  if (!state.status.finished) violation("trace says finished but no polygon was completed");
  if (st["loser"].get<int>() != state.status.loser) violation("recorded loser does not match replay");

  std::vector<int> witness;
  for (const auto& w : st["witness"]) {
    if (!w.is_number_integer()) malformed("witness entries must be move indices");
    witness.push_back(w.get<int>());
  }
  const int n = state.step();
  std::set<int> distinct(witness.begin(), witness.end());
  if (witness.size() != 5 || distinct.size() != 5 || *distinct.begin() < 0 ||
      *distinct.rbegin() >= n || !distinct.count(n - 1)) {
    violation("witness must be 5 distinct move indices including the last move");
  }
  const OrderType ot(state.moves);
  if (!in_convex_position(ot, witness)) violation("witness is not in convex position");
  const auto hull = hull_indices(ot, witness);
  if (state.variant == Variant::Empty) {
    for (int q = 0; q < n; ++q) {
      if (!distinct.count(q) && inside_convex(ot, hull, q)) violation("witness polygon is not empty");
    }
  }
  state.status.witness = hull;
  return state;
}

GameState deserialize_trace(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    malformed(std::string("invalid JSON: ") + e.what());
  }
  return trace_from_json(j);
}

nlohmann::ordered_json outcome_to_json(const MoveOutcome& outcome) {
  nlohmann::ordered_json j;
  j["accepted"] = outcome.accepted;
  j["step"] = outcome.step;
  j["status"] = status_to_json(outcome.status);
  j["label"] = nullptr;
  if (outcome.label) j["label"] = to_string(*outcome.label);
  j["engine_reply"] = nullptr;
  if (outcome.engine_reply) j["engine_reply"] = *outcome.engine_reply;
  return j;
}

}  // namespace esg
