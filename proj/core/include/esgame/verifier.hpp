#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "esgame/patterns.hpp"
#include "esgame/point.hpp"
#include "esgame/strategy.hpp"
#include "esgame/variant.hpp"

namespace esg {

enum class Verdict { Verified, CounterexampleFound, Inconclusive };

std::string_view to_string(Verdict v);

struct VerificationReport {
  std::string lemma;
  std::string scope;
  Verdict verdict = Verdict::Inconclusive;
  std::uint64_t items = 0;
  nlohmann::ordered_json stats = nlohmann::ordered_json::object();
  // Replayable trace of the first failure.
  std::optional<nlohmann::ordered_json> counterexample;
  std::uint64_t seed = 0;
  double seconds = 0;
  std::string caveat;
};

// Timing is left out unless asked for so that reports with equal seeds are
// byte-identical.
nlohmann::ordered_json report_to_json(const VerificationReport& r, bool with_timing = false);

// Trace of a legal move sequence (status filled in by the referee).
nlohmann::ordered_json position_trace(std::span<const Point> moves, Variant v);

// The canonical opening: (0,0), then player 2's (1,0), then (0,1).
std::vector<Point> canonical_triangle();

// Player 1 tries every cell at steps 5 and 7, player 2 answers with
// `player2` (choose_move when empty). Every line must pass through the
// configurations 4, 5.x, 6.x, 7.x, 8 and every cell at step 9 must lose.
VerificationReport verify_strategy_tree(Variant v, const MovePolicy& player2 = {});

// No n-point position (n = 4 or 6) is bad: random legal sets, stratified by
// layer type, each have a cell that does not lose.
VerificationReport verify_no_bad_small(int n, Variant v, int samples, std::uint64_t seed);

// Every structured sample of signature (4,3,2) or (4,4,1) has an empty convex
// 5-gon. Signature (4,4) runs the control: configuration 8 positions reached
// by the strategy have none.
VerificationReport verify_layered_lemma(const LayerType& signature, int samples,
                                        std::uint64_t seed);

// Configuration 8 positions produced by the strategy against random
// opponents, alternating variants.
std::vector<std::vector<Point>> config8_samples(int count, std::uint64_t seed);

// (a) every cell completes an empty convex 5-gon; (b) every cell outside the
// outer layer lies in one of the four type 2 beams pairing an inner edge with
// the outer points that hide its endpoints. Sets without a convex 5-gon also
// get the beam-count check.
VerificationReport verify_config8_closure(std::span<const std::vector<Point>> samples);

// Full games: random player 1 against choose_move.
VerificationReport simulate_games(Variant v, int games, std::uint64_t seed);

// Random 9-point sets contain a convex 5-gon; a configuration 8 position
// from the convex game does not.
VerificationReport verify_nine_points(int samples, std::uint64_t seed);

// Game lengths for k = 3 and 4 from the empty board, and the k = 5 strategy
// certificate from the canonical triangle.
VerificationReport verify_solver(Variant v);

}  // namespace esg
