#include <doctest.h>

#include "esgame/error.hpp"
#include "esgame/referee.hpp"
#include "esgame/render.hpp"
#include "esgame/sampler.hpp"
#include "esgame/strategy.hpp"
#include "oracles.hpp"

using namespace esg;

namespace {

GameState strategy_game(Variant v, std::uint64_t seed) {
  Rng rng(seed);
  GameState s = new_game(v);
  while (!s.status.finished) {
    apply_move(s, s.to_move() == 2 ? choose_move(s.moves, v) : random_adversary_move(s.moves, v, rng));
  }
  return s;
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("new games start empty and independent") {
  GameState a = new_game(Variant::Convex);
  GameState b = new_game(Variant::Empty);
  CHECK(a.moves.empty());
  CHECK(b.moves.empty());
  apply_move(a, Point(0, 0));
  CHECK(a.step() == 1);
  CHECK(new_game(Variant::Convex).step() == 0);
  CHECK(b.step() == 0);
}

TEST_CASE("apply_move accepts and rejects") {
  GameState s = new_game(Variant::Convex);
  const MoveOutcome o = apply_move(s, Point(0, 0));
  CHECK(o.accepted);
  CHECK(o.step == 1);
  CHECK_FALSE(o.status.finished);
  apply_move(s, Point(1, 1));
  CHECK(code_of([&] { apply_move(s, Point(2, 2)); }) == ErrorCode::GeneralPositionViolation);
  CHECK(code_of([&] { apply_move(s, Point(1, 1)); }) == ErrorCode::DuplicatePoint);
  CHECK(s.step() == 2);
}

TEST_CASE("configuration 8 plus any point ends the empty game") {
  GameState s = new_game(Variant::Empty);
  Rng rng(12);
  while (s.step() < 8) {
    apply_move(s, s.to_move() == 2 ? choose_move(s.moves, Variant::Empty)
                                   : random_adversary_move(s.moves, Variant::Empty, rng));
  }
  for (int i = 0; i < 20; ++i) {
    GameState t = s;
    const Point p = random_adversary_move(t.moves, Variant::Empty, rng);
    const MoveOutcome o = apply_move(t, p);
    REQUIRE(o.status.finished);
    CHECK(o.status.loser == 1);
    std::vector<int> w(o.status.witness.begin(), o.status.witness.end());
    CHECK(oracle::convex_position(t.moves, w));
    CHECK_FALSE(oracle::has_interior_point(t.moves, w));
    CHECK(code_of([&] { apply_move(t, Point(1000, 1001)); }) == ErrorCode::GameAlreadyFinished);
  }
}

TEST_CASE("statuses are a function of the move list") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    const Variant v = seed % 2 ? Variant::Convex : Variant::Empty;
    const GameState g = strategy_game(v, seed);
    CHECK(g.step() == 9);
    CHECK(g.status.loser == 1);
    GameState replay = new_game(v);
    for (std::size_t i = 0; i < g.moves.size(); ++i) {
      const MoveOutcome o = apply_move(replay, g.moves[i]);
      std::vector<Point> prefix(g.moves.begin(), g.moves.begin() + i + 1);
      const bool any = oracle::count_kgons(prefix, 5, v == Variant::Empty) > 0;
      CHECK(o.status.finished == any);
    }
    CHECK(replay == g);
  }
}

TEST_CASE("trace round trip") {
  const GameState fresh = new_game(Variant::Convex);
  CHECK(serialize_trace(fresh) == R"({"variant":"convex","moves":[],"status":"ongoing"})");
  CHECK(deserialize_trace(serialize_trace(fresh)) == fresh);

  const GameState done = strategy_game(Variant::Empty, 7);
  const GameState back = deserialize_trace(serialize_trace(done));
  CHECK(back == done);
  CHECK(back.status.witness == done.status.witness);
  CHECK(trace_to_json(back) == trace_to_json(done));
}

TEST_CASE("traces that break the rules are refused") {
  CHECK(code_of([] {
          deserialize_trace(
              R"({"variant":"convex","moves":[{"x":"0","y":"0"},{"x":"1","y":"1"},{"x":"2","y":"2"}],"status":"ongoing"})");
        }) == ErrorCode::InvariantViolation);
  CHECK(code_of([] { deserialize_trace(R"({"variant":"convex","moves":[]})"); }) ==
        ErrorCode::MalformedTrace);
  CHECK(code_of([] { deserialize_trace("not json"); }) == ErrorCode::MalformedTrace);
  CHECK(code_of([] {
          deserialize_trace(
              R"({"variant":"convex","moves":[{"x":"0","y":"0"}],"status":{"loser":1,"witness":[0]}})");
        }) == ErrorCode::InvariantViolation);

  auto j = trace_to_json(strategy_game(Variant::Convex, 2));
  j["status"]["loser"] = 2;
  CHECK(code_of([&] { trace_from_json(j); }) == ErrorCode::InvariantViolation);
}

TEST_CASE("svg output") {
  const GameState empty = new_game(Variant::Convex);
  const std::string blank = render_svg(empty);
  CHECK(blank.rfind("<svg", 0) == 0);
  CHECK(blank.find("</svg>") != std::string::npos);

  const GameState done = strategy_game(Variant::Convex, 5);
  const std::string svg = render_svg(done);
  std::size_t glyphs = 0;
  for (std::size_t at = svg.find("class=\"pt"); at != std::string::npos; at = svg.find("class=\"pt", at + 1)) ++glyphs;
  CHECK(glyphs == 9);
  CHECK(svg == render_svg(done));
}

TEST_CASE("overlays") {
  GameState s = new_game(Variant::Empty);
  CHECK(compute_overlay(s).losing_regions.empty());
  Rng rng(31);
  while (s.step() < 8) {
    apply_move(s, s.to_move() == 2 ? choose_move(s.moves, Variant::Empty)
                                   : random_adversary_move(s.moves, Variant::Empty, rng));
  }
  const OverlayBundle eight = compute_overlay(s);
  CHECK(eight.losing_regions.size() == eight.cell_count);
  CHECK(eight.label == ConfigurationLabel::Config8);

  GameState four = new_game(Variant::Empty);
  for (const Point& p : {Point(0, 0), Point(4, 0), Point(5, 3), Point(1, 3)}) apply_move(four, p);
  const OverlayBundle o = compute_overlay(four);
  const std::vector<Point> quad(four.moves.begin(), four.moves.end());
  CHECK(o.losing_regions.size() > 0);
  CHECK(o.losing_regions.size() < o.cell_count);
  for (const auto& poly : o.losing_regions) {
    Rational cx = 0, cy = 0;
    for (const auto& v : poly) {
      cx += v.x;
      cy += v.y;
    }
    const Point c(cx / static_cast<long>(poly.size()), cy / static_cast<long>(poly.size()));
    CHECK(oracle::quad_region(quad, c) == 'O');
  }
  const auto j = overlay_to_json(o);
  CHECK(j["losing_regions"].size() == o.losing_regions.size());
}
