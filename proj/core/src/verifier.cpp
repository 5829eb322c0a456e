#include "esgame/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>

#include "esgame/error.hpp"
#include "esgame/hull.hpp"
#include "esgame/json.hpp"
#include "esgame/order_type.hpp"
#include "esgame/referee.hpp"
#include "esgame/regions.hpp"
#include "esgame/sampler.hpp"

namespace esg {

namespace {

constexpr const char* kRepresentativeCaveat =
    "verified over representative realizations: one concrete point per arrangement cell";

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void finish(VerificationReport& r, std::uint64_t failures, const Stopwatch& clock) {
  if (failures > 0) {
    r.verdict = Verdict::CounterexampleFound;
  } else {
    r.verdict = r.items > 0 ? Verdict::Verified : Verdict::Inconclusive;
  }
  r.stats["failures"] = failures;
  r.seconds = clock.seconds();
}

std::vector<Point> with_point(std::span<const Point> pts, const Point& p) {
  std::vector<Point> out(pts.begin(), pts.end());
  out.push_back(p);
  return out;
}

}  // namespace

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Verified:
      return "Verified";
    case Verdict::CounterexampleFound:
      return "CounterexampleFound";
    case Verdict::Inconclusive:
      return "Inconclusive";
  }
  return "Inconclusive";
}

nlohmann::ordered_json report_to_json(const VerificationReport& r, bool with_timing) {
  nlohmann::ordered_json j;
  j["lemma"] = r.lemma;
  j["scope"] = r.scope;
  j["verdict"] = to_string(r.verdict);
  j["items"] = r.items;
  j["seed"] = r.seed;
  j["stats"] = r.stats;
  if (r.counterexample) j["counterexample"] = *r.counterexample;
  if (!r.caveat.empty()) j["caveat"] = r.caveat;
  if (with_timing) j["seconds"] = r.seconds;
  return j;
}

nlohmann::ordered_json position_trace(std::span<const Point> moves, Variant v) {
  GameState state = new_game(v);
  for (const Point& p : moves) {
    if (state.status.finished) break;
    apply_move(state, p);
  }
  return trace_to_json(state);
}

std::vector<Point> canonical_triangle() { return {Point(0, 0), Point(1, 0), Point(0, 1)}; }

// ---------------------------------------------------------------------------
// Strategy tree

namespace {

class TreeWalk {
 public:
  TreeWalk(Variant v, MovePolicy policy, VerificationReport& report)
      : v_(v), policy_(std::move(policy)), report_(report) {}

  void run() {
    std::vector<Point> pts = canonical_triangle();
    std::vector<std::string> labels;
    visit(pts, labels);
  }

  std::uint64_t failures = 0;
  std::uint64_t leaves = 0;
  std::uint64_t step9_cells = 0;
  std::uint64_t blunders5 = 0;
  std::uint64_t blunders7 = 0;
  std::uint64_t positions5 = 0;
  std::uint64_t positions7 = 0;
  int deepest = 0;
  std::map<std::string, std::uint64_t> paths;

 private:
  static bool expected(int step, ConfigurationLabel l) {
    using L = ConfigurationLabel;
    switch (step) {
      case 4:
        return l == L::Config4;
      case 5:
        return l == L::Config5_1 || l == L::Config5_2;
      case 6:
        return l == L::Config6_1 || l == L::Config6_2;
      case 7:
        return l == L::Config7_1 || l == L::Config7_2;
      case 8:
        return l == L::Config8;
      default:
        return false;
    }
  }

  void fail(std::span<const Point> pts, const std::string& why) {
    if (failures++ == 0) {
      report_.counterexample = position_trace(pts, v_);
      (*report_.counterexample)["reason"] = why;
    }
  }

  void visit(std::vector<Point>& pts, std::vector<std::string>& labels) {
    const int step = static_cast<int>(pts.size()) + 1;
    deepest = std::max(deepest, step);
    if (step == 9) {
      const CellSplit split = split_cells(pts, v_);
      step9_cells += split.cells.size();
      ++leaves;
      if (split.losing_count != split.cells.size()) {
        for (std::size_t i = 0; i < split.cells.size(); ++i) {
          if (!split.losing[i]) {
            fail(with_point(pts, split.cells[i].representative), "player 1 survives step 9");
            break;
          }
        }
        return;
      }
      std::string path;
      for (const auto& l : labels) path += (path.empty() ? "" : ">") + l;
      ++paths[path];
      return;
    }

    if (step % 2 == 0) {
      Point p;
      try {
        p = policy_(pts);
      } catch (const Error& e) {
        fail(pts, std::string("player 2 has no move: ") + e.what());
        return;
      }
      pts.push_back(p);
      descend(pts, labels, step);
      pts.pop_back();
      return;
    }

    const CellSplit split = split_cells(pts, v_);
    for (std::size_t i = 0; i < split.cells.size(); ++i) {
      if (split.losing[i]) {
        ++(step == 5 ? blunders5 : blunders7);
        continue;
      }
      ++(step == 5 ? positions5 : positions7);
      pts.push_back(split.cells[i].representative);
      descend(pts, labels, step);
      pts.pop_back();
    }
  }

  void descend(std::vector<Point>& pts, std::vector<std::string>& labels, int step) {
    if (!in_general_position(pts)) {
      fail(pts, "move breaks general position");
      return;
    }
    if (find_losing_polygon(OrderType(pts), v_, 5, step - 1)) {
      fail(pts, "player " + std::to_string(step % 2 == 0 ? 2 : 1) + " completes a polygon at step " +
                    std::to_string(step));
      return;
    }
    const ConfigurationLabel l = classify_configuration(pts);
    if (!expected(step, l)) {
      fail(pts, "unexpected configuration " + std::string(to_string(l)) + " at step " +
                    std::to_string(step));
      return;
    }
    labels.emplace_back(to_string(l));
    visit(pts, labels);
    labels.pop_back();
  }

  Variant v_;
  MovePolicy policy_;
  VerificationReport& report_;
};

}  // namespace

VerificationReport verify_strategy_tree(Variant v, const MovePolicy& player2) {
  Stopwatch clock;
  VerificationReport r;
  r.lemma = "strategy";
  r.scope = std::string(to_string(v));
  r.caveat = kRepresentativeCaveat;
  MovePolicy policy = player2;
  if (!policy) policy = [v](std::span<const Point> pts) { return choose_move(pts, v); };

  TreeWalk walk(v, policy, r);
  walk.run();
  r.items = walk.leaves;
  r.stats["start"] = position_trace(canonical_triangle(), v)["moves"];
  r.stats["positions_step5"] = walk.positions5;
  r.stats["losing_cells_step5"] = walk.blunders5;
  r.stats["positions_step7"] = walk.positions7;
  r.stats["losing_cells_step7"] = walk.blunders7;
  r.stats["leaves"] = walk.leaves;
  r.stats["cells_step9"] = walk.step9_cells;
  r.stats["deepest_step"] = walk.deepest;
  nlohmann::ordered_json paths = nlohmann::ordered_json::object();
  for (const auto& [path, count] : walk.paths) paths[path] = count;
  r.stats["label_paths"] = paths;
  finish(r, walk.failures, clock);
  return r;
}

// ---------------------------------------------------------------------------
// Small positions are never bad

namespace {

std::string three_three_case(const std::vector<Point>& pts) {
  const OrderType ot(pts);
  const auto layers = layer_indices(ot);
  const std::array<int, 3> tri{layers[1][0], layers[1][1], layers[1][2]};
  std::map<int, int> i_count, o_count;
  for (int x : layers[0]) {
    const TriangleRegion tr = triangle_region(ot, tri, x);
    if (tr.region == RegionClass::I) ++i_count[tr.vertex_or_edge];
    if (tr.region == RegionClass::O) ++o_count[tr.vertex_or_edge];
  }
  int is = 0, os = 0;
  for (auto& [k, c] : i_count) is += c;
  for (auto& [k, c] : o_count) os += c;
  if (is == 3 && i_count.size() == 3) return "(I,I,I)";
  if (os == 3 && o_count.size() == 3) return "(O,O,O)";
  if (is == 2 && os == 1) {
    if (i_count.size() == 2) return "(I,I,O)";
    // Both I points beyond vertex v; the O point beyond the edge opposite v.
    const int v = i_count.begin()->first;
    if (o_count.begin()->first == (v + 1) % 3) return "(2I,O)";
  }
  if (os == 2 && is == 1 && o_count.size() == 2) return "(O,O,I)";
  return "other";
}

}  // namespace

VerificationReport verify_no_bad_small(int n, Variant v, int samples, std::uint64_t seed) {
  if (n != 4 && n != 6) throw Error(ErrorCode::InvalidArgument, "n must be 4 or 6");
  Stopwatch clock;
  VerificationReport r;
  r.lemma = "no_bad_small";
  r.scope = "n=" + std::to_string(n) + " " + std::string(to_string(v));
  r.seed = seed;
  r.caveat = kRepresentativeCaveat;

  std::vector<LayerType> strata;
  if (n == 4) {
    strata = {LayerType{{4}}, LayerType{{3, 1}}};
  } else {
    strata = {LayerType{{3, 3}}, LayerType{{4, 2}}};
    if (v == Variant::Empty) strata.push_back(LayerType{{5, 1}});
  }
  // Per-stratum quotas summing to exactly `samples`.
  std::map<std::string, int> quota;
  const int per = samples / static_cast<int>(strata.size());
  for (std::size_t i = 0; i < strata.size(); ++i) {
    quota[to_string(strata[i])] = per + (static_cast<int>(i) < samples % static_cast<int>(strata.size()));
  }
  std::map<std::string, int> filled;
  std::map<std::string, std::uint64_t> sub_cases;
  std::uint64_t failures = 0, drawn = 0, illegal = 0, cells_tested = 0;

  Rng rng(seed);
  int done = 0;
  const long range = n == 4 ? 64 : 256;
  while (done < samples) {
    if (++drawn > 1000ull * static_cast<std::uint64_t>(samples) + 100000) break;
    auto pts = random_general_position(n, rng, range);
    const OrderType ot(pts);
    const LayerType t = layer_type(ot);
    const std::string key = to_string(t);
    if (std::find(strata.begin(), strata.end(), t) == strata.end() || filled[key] >= quota[key]) continue;
    if (find_losing_polygon(ot, v)) {
      ++illegal;
      continue;
    }
    ++filled[key];
    ++done;
    if (t == LayerType{{3, 3}}) ++sub_cases[three_three_case(pts)];

    bool found = false;
    for (const Cell& cell : arrangement_cells(pts)) {
      ++cells_tested;
      if (!find_losing_polygon(ot.extended(cell.signs), v, 5, n)) {
        found = true;
        break;
      }
    }
    if (!found && failures++ == 0) {
      r.counterexample = position_trace(pts, v);
      (*r.counterexample)["reason"] = "every cell completes a polygon";
    }
  }
  r.items = static_cast<std::uint64_t>(done);
  nlohmann::ordered_json per_type = nlohmann::ordered_json::object();
  for (const auto& t : strata) per_type[to_string(t)] = filled[to_string(t)];
  r.stats["per_layer_type"] = per_type;
  if (n == 6) {
    nlohmann::ordered_json sc = nlohmann::ordered_json::object();
    for (const char* name : {"(I,I,I)", "(O,O,O)", "(I,I,O)", "(O,O,I)", "(2I,O)", "other"}) {
      sc[name] = sub_cases[name];
    }
    r.stats["three_three_cases"] = sc;
  }
  r.stats["drawn"] = drawn;
  r.stats["rejected_with_polygon"] = illegal;
  r.stats["cells_tested"] = cells_tested;
  finish(r, failures, clock);
  if (done < samples && failures == 0) r.verdict = Verdict::Inconclusive;
  return r;
}

// ---------------------------------------------------------------------------
// Layered lemmas

std::vector<std::vector<Point>> config8_samples(int count, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<std::vector<Point>> out;
  for (int i = 0; i < count; ++i) {
    const Variant v = i % 2 == 0 ? Variant::Convex : Variant::Empty;
    std::vector<Point> pts;
    while (pts.size() < 8) {
      if (pts.size() % 2 == 0) {
        pts.push_back(random_adversary_move(pts, v, rng));
      } else {
        pts.push_back(choose_move(pts, v));
      }
    }
    out.push_back(std::move(pts));
  }
  return out;
}

VerificationReport verify_layered_lemma(const LayerType& signature, int samples,
                                        std::uint64_t seed) {
  Stopwatch clock;
  VerificationReport r;
  r.lemma = "layered";
  r.scope = to_string(signature);
  r.seed = seed;
  std::uint64_t failures = 0;

  if (signature == LayerType{{4, 4}}) {
    r.scope += " control";
    const auto sets = config8_samples(samples, seed);
    for (const auto& pts : sets) {
      ++r.items;
      const bool is8 = classify_configuration(pts) == ConfigurationLabel::Config8;
      if ((!is8 || find_empty_convex_5gon(pts)) && failures++ == 0) {
        r.counterexample = position_trace(pts, Variant::Empty);
        (*r.counterexample)["reason"] = is8 ? "configuration 8 has an empty convex 5-gon"
                                            : "sample is not configuration 8";
      }
    }
    finish(r, failures, clock);
    return r;
  }

  if (signature != LayerType{{4, 3, 2}} && signature != LayerType{{4, 4, 1}}) {
    throw Error(ErrorCode::InvalidArgument, "signature must be (4,3,2), (4,4,1) or (4,4)");
  }
  std::uint64_t empty_witness_total = 0;
  for (int i = 0; i < samples; ++i) {
    const StructuredSample s = structured_sample(signature, seed + static_cast<std::uint64_t>(i));
    ++r.items;
    const auto w = find_empty_convex_5gon(s.points);
    if (w) {
      ++empty_witness_total;
    } else if (failures++ == 0) {
      r.counterexample = position_trace(s.points, Variant::Empty);
      (*r.counterexample)["reason"] = "no empty convex 5-gon";
      (*r.counterexample)["sample_seed"] = s.seed;
    }
  }
  r.stats["with_witness"] = empty_witness_total;
  r.stats["sample_seeds"] = std::to_string(seed) + ".." + std::to_string(seed + samples - 1);
  finish(r, failures, clock);
  return r;
}

// ---------------------------------------------------------------------------
// Configuration 8 closure

namespace {

// Beams of convex 4-subsets must be empty and type 1 beams may not hold two
// points in convex position with their anchors.
std::uint64_t beam_count_violations(const std::vector<Point>& pts) {
  const int n = static_cast<int>(pts.size());
  const OrderType ot(pts);
  std::uint64_t bad = 0;
  for_each_subset(n, 4, [&](std::span<const int> s) {
    if (!in_convex_position(ot, s)) return false;
    const auto q = hull_indices(ot, s);
    for (int rot = 0; rot < 4; ++rot) {
      const Beam b = Beam::type2(pts[q[rot]], pts[q[(rot + 1) % 4]], pts[q[(rot + 2) % 4]],
                                 pts[q[(rot + 3) % 4]]);
      for (int x = 0; x < n; ++x) {
        if (std::find(s.begin(), s.end(), x) == s.end() && beam_contains(b, pts[x])) ++bad;
      }
    }
    return false;
  });
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = b + 1; c < n; ++c) {
        if (a == b || a == c) continue;
        const Beam beam = Beam::type1(pts[a], pts[b], pts[c]);
        std::vector<int> inside;
        for (int x = 0; x < n; ++x) {
          if (x != a && x != b && x != c && beam_contains(beam, pts[x])) inside.push_back(x);
        }
        for (std::size_t i = 0; i < inside.size(); ++i) {
          for (std::size_t j = i + 1; j < inside.size(); ++j) {
            const int five[5] = {a, b, c, inside[i], inside[j]};
            if (in_convex_position(ot, five)) ++bad;
          }
        }
      }
    }
  }
  return bad;
}

}  // namespace

VerificationReport verify_config8_closure(std::span<const std::vector<Point>> samples) {
  Stopwatch clock;
  VerificationReport r;
  r.lemma = "closure";
  r.scope = "configuration 8";
  r.caveat = kRepresentativeCaveat;
  std::uint64_t failures = 0, cells = 0, outer_cells = 0, beam_checked_sets = 0, beam_bad = 0;
  std::map<std::string, std::uint64_t> inner;

  auto fail = [&](const std::vector<Point>& pts, const std::string& why) {
    if (failures++ == 0) {
      r.counterexample = position_trace(pts, Variant::Empty);
      (*r.counterexample)["reason"] = why;
    }
  };

  for (const auto& pts : samples) {
    ++r.items;
    if (classify_configuration(pts) != ConfigurationLabel::Config8) {
      fail(pts, "sample is not configuration 8");
      continue;
    }
    const OrderType ot(pts);
    const auto layers = layer_indices(ot);
    const auto& outer = layers[0];
    const std::array<int, 4> quad{layers[1][0], layers[1][1], layers[1][2], layers[1][3]};
    // hider[k]: the outer point that hides inner vertex k.
    std::array<int, 4> hider{};
    for (int x : outer) hider[region_info(ot, quad, x).hidden[0]] = x;
    std::vector<Beam> beams;
    try {
      for (int k = 0; k < 4; ++k) {
        const int a = quad[k], b = quad[(k + 1) % 4];
        beams.push_back(Beam::type2(pts[a], pts[b], pts[hider[(k + 1) % 4]], pts[hider[k]]));
      }
    } catch (const Error&) {
      fail(pts, "beam anchors are not a convex 4-gon");
      continue;
    }

    for (const Cell& cell : arrangement_cells(pts)) {
      ++cells;
      const OrderType next = ot.extended(cell.signs);
      const auto all = with_point(pts, cell.representative);
      if (!find_convex_kgon(next, 5, true, 8)) {
        fail(all, "cell without an empty convex 5-gon");
        continue;
      }
      if (!inside_convex(next, outer, 8)) {
        ++outer_cells;
        const bool covered = std::any_of(beams.begin(), beams.end(), [&](const Beam& b) {
          return beam_contains(b, cell.representative);
        });
        if (!covered) fail(all, "outer cell in none of the four type 2 beams");
        continue;
      }
      const RegionInfo info = region_info(next, quad, 8);
      const std::string t = to_string(layer_type(next));
      const std::string key = std::string(to_string(info.region)) + " " + t;
      ++inner[key];
      const bool expected_type = info.region == RegionClass::O ||
                                 (info.region == RegionClass::S && t == "(4,3,2)") ||
                                 ((info.region == RegionClass::I || info.region == RegionClass::Z) &&
                                  t == "(4,4,1)");
      if (!expected_type) fail(all, "inner cell of unexpected layer type " + key);
    }

    if (!find_convex_kgon(ot, 5, false)) {
      ++beam_checked_sets;
      const std::uint64_t bad = beam_count_violations(pts);
      beam_bad += bad;
      if (bad > 0) fail(pts, "beam count violated in a set without convex 5-gon");
    }
  }
  r.stats["cells"] = cells;
  r.stats["outer_cells_in_beams"] = outer_cells;
  nlohmann::ordered_json in = nlohmann::ordered_json::object();
  for (const auto& [k, c] : inner) in[k] = c;
  r.stats["inner_cells_by_region_and_type"] = in;
  r.stats["beam_count_sets"] = beam_checked_sets;
  r.stats["beam_count_violations"] = beam_bad;
  finish(r, failures, clock);
  return r;
}

// ---------------------------------------------------------------------------
// Simulation

VerificationReport simulate_games(Variant v, int games, std::uint64_t seed) {
  Stopwatch clock;
  VerificationReport r;
  r.lemma = "simulation";
  r.scope = std::string(to_string(v));
  r.seed = seed;
  Rng rng(seed);
  std::uint64_t failures = 0, config8 = 0;
  std::map<int, std::uint64_t> end_steps;

  for (int g = 0; g < games; ++g) {
    GameState state = new_game(v);
    std::string problem;
    while (!state.status.finished && state.step() < 12) {
      const bool engine = state.to_move() == 2;
      Point p;
      try {
        p = engine ? choose_move(state.moves, v) : random_adversary_move(state.moves, v, rng);
        apply_move(state, p);
      } catch (const Error& e) {
        problem = std::string(engine ? "engine: " : "adversary: ") + e.what();
        break;
      }
      if (state.step() == 8 && !state.status.finished) {
        if (classify_configuration(state.moves) == ConfigurationLabel::Config8) {
          ++config8;
        } else {
          problem = "step 8 is not configuration 8";
        }
      }
    }
    ++r.items;
    ++end_steps[state.step()];
    if (problem.empty() && !(state.status.finished && state.step() == 9 && state.status.loser == 1)) {
      problem = "game did not end at step 9 with player 1 losing";
    }
    if (!problem.empty() && failures++ == 0) {
      r.counterexample = trace_to_json(state);
      (*r.counterexample)["reason"] = problem;
    }
  }
  nlohmann::ordered_json ends = nlohmann::ordered_json::object();
  for (const auto& [s, c] : end_steps) ends[std::to_string(s)] = c;
  r.stats["end_steps"] = ends;
  r.stats["config8_at_step8"] = config8;
  finish(r, failures, clock);
  return r;
}

VerificationReport verify_nine_points(int samples, std::uint64_t seed) {
  Stopwatch clock;
  VerificationReport r;
  r.lemma = "nine_points";
  r.scope = "convex 5-gon in 9 points";
  r.seed = seed;
  Rng rng(seed);
  std::uint64_t failures = 0;
  for (int i = 0; i < samples; ++i) {
    const auto pts = random_general_position(9, rng);
    ++r.items;
    if (!find_convex_5gon(pts) && failures++ == 0) {
      r.counterexample = position_trace(pts, Variant::Convex);
      (*r.counterexample)["reason"] = "9 points without a convex 5-gon";
    }
  }
  // An 8-point set without one: configuration 8 from the convex game.
  const auto eight = config8_samples(1, seed).front();
  const bool free8 = !find_convex_5gon(eight) &&
                     classify_configuration(eight) == ConfigurationLabel::Config8;
  r.stats["config8_without_convex_5gon"] = position_trace(eight, Variant::Convex)["moves"];
  if (!free8 && failures++ == 0) {
    r.counterexample = position_trace(eight, Variant::Convex);
    (*r.counterexample)["reason"] = "configuration 8 sample contains a convex 5-gon";
  }
  finish(r, failures, clock);
  return r;
}

VerificationReport verify_solver(Variant v) {
  Stopwatch clock;
  VerificationReport r;
  r.lemma = "solver";
  r.scope = std::string(to_string(v));
  r.caveat = kRepresentativeCaveat;
  std::uint64_t failures = 0;
  const int expected[] = {3, 5};
  for (int k : {3, 4}) {
    const int len = game_length(k, v);
    r.stats["game_length_k" + std::to_string(k)] = len;
    ++r.items;
    if (len != expected[k - 3]) ++failures;
  }
  SolveOptions options;
  options.policy = [v](std::span<const Point> pts) { return choose_move(pts, v); };
  const SolveResult k5 = solve_and_or(canonical_triangle(), v, 5, 9, options);
  ++r.items;
  r.stats["k5_certified_by_step9"] = k5.certified;
  r.stats["k5_deepest_step"] = k5.deepest;
  r.stats["k5_nodes"] = k5.nodes;
  if (!k5.certified || k5.deepest != 9) {
    ++failures;
    r.counterexample = position_trace(k5.refutation, v);
  }
  finish(r, failures, clock);
  return r;
}

}  // namespace esg
