#include <doctest.h>

#include "esgame/arrangement.hpp"
#include "esgame/error.hpp"
#include "esgame/patterns.hpp"
#include "esgame/regions.hpp"
#include "esgame/sampler.hpp"
#include "esgame/strategy.hpp"
#include "esgame/verifier.hpp"
#include "oracles.hpp"

using namespace esg;

namespace {

bool loses(std::vector<Point> pts, const Point& p, Variant v) {
  pts.push_back(p);
  return oracle::count_kgons(pts, 5, v == Variant::Empty) > 0;
}

std::vector<Point> play_to(int step, Variant v, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Point> pts;
  while (static_cast<int>(pts.size()) < step) {
    pts.push_back(pts.size() % 2 ? choose_move(pts, v) : random_adversary_move(pts, v, rng));
  }
  return pts;
}

}  // namespace

TEST_CASE("second move") {
  CHECK(construct_second(Point(3, -2)) == Point(4, -2));
}

TEST_CASE("parallelogram completion picks the smallest candidate") {
  const std::vector<Point> a{{0, 0}, {4, 0}, {0, 4}};
  CHECK(construct_parallelogram(a) == Point(-4, 4));
  const std::vector<Point> b{{0, 0}, {2, 0}, {1, 3}};
  CHECK(construct_parallelogram(b) == Point(-1, 3));

  Rng rng(4);
  for (int i = 0; i < 50; ++i) {
    auto tri = random_general_position(3, rng);
    tri.push_back(construct_parallelogram(tri));
    CHECK(classify_configuration(tri) == ConfigurationLabel::Config4);
  }
}

TEST_CASE("sixth point from configurations 5.1 and 5.2") {
  for (Variant v : {Variant::Convex, Variant::Empty}) {
    std::vector<Point> five51{{0, 4}, {0, 0}, {4, 0}, {4, 4}, {2, 1}};
    const Point f = construct_sixth(five51, v);
    CHECK_FALSE(loses(five51, f, v));
    five51.push_back(f);
    CHECK(classify_configuration(five51) == ConfigurationLabel::Config6_1);

    std::vector<Point> five52{{0, 0}, {4, 0}, {9, 8}, {0, 4}, {4, 4}};
    const Point g = construct_sixth(five52, v);
    CHECK_FALSE(loses(five52, g, v));
    five52.push_back(g);
    CHECK(classify_configuration(five52) == ConfigurationLabel::Config6_2);
  }
}

TEST_CASE("eighth point reaches configuration 8 from both 7-point labels") {
  for (Variant v : {Variant::Convex, Variant::Empty}) {
    int seen71 = 0, seen72 = 0, empty_with_convex = 0;
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
      auto seven = play_to(7, v, seed);
      const auto label = classify_configuration(seven);
      REQUIRE((label == ConfigurationLabel::Config7_1 || label == ConfigurationLabel::Config7_2));
      (label == ConfigurationLabel::Config7_1 ? seen71 : seen72)++;
      if (v == Variant::Empty && oracle::count_kgons(seven, 5, false) > 0) ++empty_with_convex;
      const Point h = construct_eighth(seven, v);
      CHECK_FALSE(loses(seven, h, v));
      seven.push_back(h);
      CHECK(classify_configuration(seven) == ConfigurationLabel::Config8);
    }
    CHECK(seen71 > 0);
    CHECK(seen72 > 0);
    if (v == Variant::Empty) CHECK(empty_with_convex > 0);
  }
}

TEST_CASE("choose_move") {
  const std::vector<Point> three{{0, 0}, {6, 1}, {2, 5}};
  CHECK(choose_move(three, Variant::Convex) == construct_parallelogram(three));

  std::vector<Point> five{{0, 4}, {0, 0}, {4, 0}, {4, 4}, {2, 1}};
  five.push_back(choose_move(five, Variant::Empty));
  CHECK(classify_configuration(five) == ConfigurationLabel::Config6_1);

  CHECK_THROWS_AS(choose_move(std::vector<Point>{{0, 0}, {1, 0}}, Variant::Convex), Error);
  const std::vector<Point> pentagon{{0, 0}, {4, 0}, {6, 3}, {3, 6}, {-1, 3}};
  try {
    choose_move(pentagon, Variant::Convex);
    FAIL("finished position accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::GameAlreadyFinished);
  }
}

TEST_CASE("choose_move falls back to search off the main line") {
  // Player 2 did not complete the parallelogram at step 4.
  const std::vector<Point> five{{0, 0}, {1, 0}, {0, 1}, {3, 2}, {-5, 7}};
  REQUIRE(oracle::count_kgons(five, 5, false) == 0);
  const Point p = choose_move(five, Variant::Empty);
  CHECK_FALSE(loses(five, p, Variant::Empty));
}

TEST_CASE("losing cells of a parallelogram in the empty game are the O cells") {
  const std::vector<Point> par{{0, 0}, {4, 0}, {5, 3}, {1, 3}};
  const std::array<Point, 4> quad{par[0], par[1], par[2], par[3]};
  const CellSplit split = split_cells(par, Variant::Empty);
  REQUIRE(split.cells.size() == split.losing.size());
  std::size_t o_cells = 0;
  for (std::size_t i = 0; i < split.cells.size(); ++i) {
    const bool o = classify_region(quad, split.cells[i].representative) == RegionClass::O;
    o_cells += o;
    CHECK(split.losing[i] == o);
    CHECK(split.losing[i] == loses(par, split.cells[i].representative, Variant::Empty));
  }
  CHECK(split.losing_count == o_cells);
  CHECK(losing_cells(par, Variant::Empty).size() == o_cells);
}

TEST_CASE("no 4-point set is bad") {
  Rng rng(17);
  for (int i = 0; i < 40; ++i) {
    const auto four = random_general_position(4, rng);
    for (Variant v : {Variant::Convex, Variant::Empty}) {
      const CellSplit split = split_cells(four, v);
      CHECK(split.losing_count < split.cells.size());
    }
  }
}

TEST_CASE("every cell of configuration 8 loses in the empty game") {
  const auto eight = play_to(8, Variant::Empty, 3);
  REQUIRE(classify_configuration(eight) == ConfigurationLabel::Config8);
  const CellSplit split = split_cells(eight, Variant::Empty);
  CHECK(split.losing_count == split.cells.size());
}

TEST_CASE("solver reproduces the small game values") {
  for (Variant v : {Variant::Convex, Variant::Empty}) {
    CHECK(game_length(3, v) == 3);
    CHECK(game_length(4, v) == 5);
  }
  const SolveResult r = solve_and_or({}, Variant::Convex, 4, 5, SolveOptions{{}, 2'000'000, true});
  CHECK(r.certified);
  CHECK(r.loser == 1);
  REQUIRE(r.certificate);
  const auto j = certificate_to_json(*r.certificate);
  CHECK(j.is_object());
  const SolveResult early = solve_and_or({}, Variant::Convex, 4, 3, {});
  CHECK_FALSE(early.certified);
  CHECK_THROWS_AS(solve_and_or({}, Variant::Convex, 6, 9, {}), Error);
}

TEST_CASE("solver certifies the strategy by step 9 from the canonical triangle") {
  SolveOptions options;
  options.policy = [](std::span<const Point> pts) { return choose_move(pts, Variant::Convex); };
  const SolveResult r = solve_and_or(canonical_triangle(), Variant::Convex, 5, 9, options);
  CHECK(r.certified);
  CHECK(r.deepest == 9);
  CHECK(r.loser == 1);
}

TEST_CASE("mutated step-4 reply breaks the strategy tree") {
  const MovePolicy mutant = [](std::span<const Point> pts) -> Point {
    if (pts.size() == 3) return Point(3, 2);  // not a parallelogram completion
    const CellSplit split = split_cells(pts, Variant::Convex);
    for (std::size_t i = 0; i < split.cells.size(); ++i)
      if (!split.losing[i]) return split.cells[i].representative;
    return split.cells.front().representative;
  };
  const VerificationReport r = verify_strategy_tree(Variant::Convex, mutant);
  CHECK(r.verdict == Verdict::CounterexampleFound);
  CHECK(r.counterexample.has_value());
}
