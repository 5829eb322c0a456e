#include <doctest.h>

#include "esgame/patterns.hpp"
#include "esgame/verifier.hpp"

using namespace esg;

// Small runs of each check; the full sample counts live in the acceptance run.

TEST_CASE("small positions are never bad") {
  for (Variant v : {Variant::Convex, Variant::Empty}) {
    const auto r4 = verify_no_bad_small(4, v, 150, 1);
    CHECK(r4.verdict == Verdict::Verified);
    CHECK(r4.items == 150);
  }
  const auto r6 = verify_no_bad_small(6, Variant::Convex, 300, 1);
  CHECK(r6.verdict == Verdict::Verified);
  CHECK(r6.stats.contains("per_layer_type"));
}

TEST_CASE("reports are reproducible from the seed") {
  const auto a = verify_no_bad_small(6, Variant::Empty, 60, 42);
  const auto b = verify_no_bad_small(6, Variant::Empty, 60, 42);
  CHECK(report_to_json(a).dump() == report_to_json(b).dump());
  CHECK(a.seed == 42);
  CHECK(a.items == 60);
  // Three strata for the empty game; the total still matches the request.
  CHECK(verify_no_bad_small(6, Variant::Empty, 61, 5).items == 61);
  const auto c = verify_layered_lemma(LayerType{{4, 3, 2}}, 30, 9);
  const auto d = verify_layered_lemma(LayerType{{4, 3, 2}}, 30, 9);
  CHECK(report_to_json(c).dump() == report_to_json(d).dump());
}

TEST_CASE("layered lemmas and their control") {
  CHECK(verify_layered_lemma(LayerType{{4, 3, 2}}, 100, 1).verdict == Verdict::Verified);
  CHECK(verify_layered_lemma(LayerType{{4, 4, 1}}, 100, 1).verdict == Verdict::Verified);
  CHECK(verify_layered_lemma(LayerType{{4, 4}}, 10, 1).verdict == Verdict::Verified);
}

TEST_CASE("configuration 8 closure on a few samples") {
  const auto samples = config8_samples(8, 3);
  REQUIRE(samples.size() == 8);
  for (const auto& s : samples) CHECK(classify_configuration(s) == ConfigurationLabel::Config8);
  const auto r = verify_config8_closure(samples);
  CHECK(r.verdict == Verdict::Verified);
  CHECK(r.stats["beam_count_violations"] == 0);
}

TEST_CASE("simulation and nine points") {
  const auto sim = simulate_games(Variant::Empty, 30, 8);
  CHECK(sim.verdict == Verdict::Verified);
  CHECK(sim.stats["end_steps"]["9"] == 30);
  CHECK(verify_nine_points(100, 2).verdict == Verdict::Verified);
}
