#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "esgame/error.hpp"
#include "esgame/json.hpp"
#include "esgame/referee.hpp"
#include "esgame/render.hpp"
#include "esgame/sampler.hpp"
#include "esgame/service.hpp"
#include "esgame/strategy.hpp"
#include "esgame/verifier.hpp"

namespace esg {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
}

std::string describe(const MoveOutcome& o) {
  std::string s = "step " + std::to_string(o.step);
  if (o.label) s += "  configuration " + std::string(to_string(*o.label));
  if (o.status.finished) s += "  player " + std::to_string(o.status.loser) + " loses";
  return s;
}

struct PlayArgs {
  std::string variant = "convex";
  std::string mode = "human";
  std::uint64_t seed = 1;
  std::string trace_out;
};

int play(const PlayArgs& a, std::istream& in, std::ostream& out) {
  const Variant v = parse_variant(a.variant);
  const GameMode mode = parse_mode(a.mode);
  GameState state = new_game(v);
  Rng rng(a.seed);

  if (mode == GameMode::EngineVsRandom) {
    while (!state.status.finished) {
      const bool engine = state.to_move() == 2;
      const Point p = engine ? choose_move(state.moves, v) : random_adversary_move(state.moves, v, rng);
      const MoveOutcome o = apply_move(state, p);
      out << (engine ? "engine " : "random ") << to_string(p) << "  " << describe(o) << "\n";
    }
  } else {
    out << "you are player 1; enter moves as 'x y' (integers, p/q or decimals), 'quit' to stop\n";
    std::string line;
    while (!state.status.finished && std::getline(in, line)) {
      if (line == "quit" || line == "q") break;
      std::istringstream words(line);
      std::string xs, ys;
      if (!(words >> xs >> ys)) {
        if (!line.empty()) out << "expected two coordinates\n";
        continue;
      }
      try {
        const Point p(parse_rational(xs), parse_rational(ys));
        const MoveOutcome o = apply_move(state, p);
        out << "you    " << to_string(p) << "  " << describe(o) << "\n";
        if (!state.status.finished) {
          const Point reply = choose_move(state.moves, v);
          const MoveOutcome r = apply_move(state, reply);
          out << "engine " << to_string(reply) << "  " << describe(r) << "\n";
        }
      } catch (const Error& e) {
        out << "rejected (" << error_code_name(e.code()) << "): " << e.what() << "\n";
      }
    }
  }
  if (state.status.finished) {
    out << "game over at step " << state.step() << ": player " << state.status.loser
        << " completed the polygon (moves";
    for (int i : state.status.witness) out << " " << i + 1;
    out << ")\n";
  }
  if (!a.trace_out.empty()) write_file(a.trace_out, trace_to_json(state).dump(2) + "\n");
  return 0;
}

struct VerifyArgs {
  std::string lemma = "all";
  std::uint64_t seed = 1;
  int samples = 0;  // 0 = per-check default
  std::string json_out;
  bool timing = false;
};

int verify(const VerifyArgs& a, std::ostream& out) {
  const auto n = [&](int fallback) { return a.samples > 0 ? a.samples : fallback; };
  const bool all = a.lemma == "all";
  std::vector<VerificationReport> reports;
  for (Variant v : {Variant::Convex, Variant::Empty}) {
    if (all || a.lemma == "strategy") reports.push_back(verify_strategy_tree(v));
  }
  if (all || a.lemma == "small") {
    for (Variant v : {Variant::Convex, Variant::Empty}) {
      reports.push_back(verify_no_bad_small(4, v, n(10000), a.seed));
      reports.push_back(verify_no_bad_small(6, v, n(10000), a.seed));
    }
  }
  if (all || a.lemma == "layered") {
    reports.push_back(verify_layered_lemma(LayerType{{4, 3, 2}}, n(10000), a.seed));
    reports.push_back(verify_layered_lemma(LayerType{{4, 4, 1}}, n(10000), a.seed));
    reports.push_back(verify_layered_lemma(LayerType{{4, 4}}, n(200), a.seed));
  }
  if (all || a.lemma == "closure") {
    const auto samples = config8_samples(n(1000), a.seed);
    reports.push_back(verify_config8_closure(samples));
    reports.back().seed = a.seed;
  }
  if (all || a.lemma == "simulate") {
    for (Variant v : {Variant::Convex, Variant::Empty}) {
      reports.push_back(simulate_games(v, n(10000), a.seed));
    }
  }
  if (all || a.lemma == "nine") reports.push_back(verify_nine_points(n(10000), a.seed));
  if (all || a.lemma == "solver") {
    for (Variant v : {Variant::Convex, Variant::Empty}) reports.push_back(verify_solver(v));
  }

  bool failed = false;
  out << std::left << std::setw(14) << "lemma" << std::setw(26) << "scope" << std::setw(22)
      << "verdict" << std::right << std::setw(10) << "items" << std::setw(10) << "seconds" << "\n";
  nlohmann::ordered_json all_json = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.2f", r.seconds);
    out << std::left << std::setw(14) << r.lemma << std::setw(26) << r.scope << std::setw(22)
        << to_string(r.verdict) << std::right << std::setw(10) << r.items << std::setw(10) << secs
        << "\n";
    if (r.verdict == Verdict::CounterexampleFound) {
      failed = true;
      out << "  counterexample: " << r.counterexample->dump() << "\n";
    }
    all_json.push_back(report_to_json(r, a.timing));
  }
  if (!reports.empty() && !reports.front().caveat.empty()) {
    out << "note: cell-exhaustive checks are " << reports.front().caveat << "\n";
  }
  if (!a.json_out.empty()) write_file(a.json_out, all_json.dump(2) + "\n");
  return failed ? 1 : 0;
}

struct SolveArgs {
  int k = 4;
  std::string variant = "convex";
  std::string certificate_out;
};

int solve(const SolveArgs& a, std::ostream& out) {
  const Variant v = parse_variant(a.variant);
  if (a.k == 5) {
    SolveOptions options;
    options.policy = [v](std::span<const Point> pts) { return choose_move(pts, v); };
    options.keep_tree = !a.certificate_out.empty();
    const SolveResult r = solve_and_or(canonical_triangle(), v, 5, 9, options);
    if (!r.certified) {
      out << "no certificate by step 9; escaping line:";
      for (const Point& p : r.refutation) out << " " << to_string(p);
      out << "\n";
      return 1;
    }
    out << "game value: ends at step " << r.deepest << "\n";
    out << "player 2 strategy from the canonical triangle, " << r.nodes << " positions searched\n";
    if (r.certificate) write_file(a.certificate_out, certificate_to_json(*r.certificate).dump() + "\n");
    return 0;
  }
  const int len = game_length(a.k, v);
  out << "game value: ends at step " << len << "\n";
  if (!a.certificate_out.empty()) {
    SolveOptions options;
    options.keep_tree = true;
    const SolveResult r = solve_and_or({}, v, a.k, len, options);
    write_file(a.certificate_out, certificate_to_json(*r.certificate).dump() + "\n");
  }
  return 0;
}

int render(const std::string& trace, const std::string& svg, bool with_overlay, std::ostream& out) {
  const GameState state = deserialize_trace(read_file(trace));
  std::string doc;
  if (with_overlay) {
    const OverlayBundle o = compute_overlay(state);
    doc = render_svg(state, &o);
  } else {
    doc = render_svg(state);
  }
  write_file(svg, doc);
  out << "wrote " << svg << " (" << state.step() << " points)\n";
  return 0;
}

int replay(const std::string& trace, std::ostream& out) {
  const GameState recorded = deserialize_trace(read_file(trace));
  GameState state = new_game(recorded.variant);
  for (const Point& p : recorded.moves) {
    const MoveOutcome o = apply_move(state, p);
    out << std::setw(2) << o.step << "  " << std::left << std::setw(28) << to_string(p)
        << std::right << (o.label ? to_string(*o.label) : std::string_view("-"))
        << (o.status.finished ? "  finished" : "  ongoing") << "\n";
  }
  out << "variant " << to_string(recorded.variant) << ", status "
      << status_to_json(recorded.status).dump() << "\n";
  return 0;
}

}  // namespace

int cli_dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
                 std::ostream& err) {
  CLI::App app{"Exact engine for the two-player convex 5-gon games"};
  app.require_subcommand(1);

  PlayArgs play_args;
  auto* play_cmd = app.add_subcommand("play", "play a game against the engine");
  play_cmd->add_option("--variant", play_args.variant)->check(CLI::IsMember({"convex", "empty"}));
  play_cmd->add_option("--mode", play_args.mode)->check(CLI::IsMember({"human", "random"}));
  play_cmd->add_option("--seed", play_args.seed);
  play_cmd->add_option("--trace-out", play_args.trace_out, "write the final trace here");

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "run the verification checks");
  verify_cmd->add_option("--lemma", verify_args.lemma)
      ->check(CLI::IsMember(
          {"all", "strategy", "small", "layered", "closure", "simulate", "nine", "solver"}));
  verify_cmd->add_option("--seed", verify_args.seed);
  verify_cmd->add_option("--samples", verify_args.samples, "override sample counts");
  verify_cmd->add_option("--json", verify_args.json_out, "write reports as JSON");
  verify_cmd->add_flag("--timing", verify_args.timing, "include seconds in the JSON reports");

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "AND-OR search for the game value");
  solve_cmd->add_option("--k", solve_args.k)->check(CLI::Range(3, 5));
  solve_cmd->add_option("--variant", solve_args.variant)->check(CLI::IsMember({"convex", "empty"}));
  solve_cmd->add_option("--certificate", solve_args.certificate_out, "write the move tree as JSON");

  std::string render_trace, render_out;
  bool render_overlay = false;
  auto* render_cmd = app.add_subcommand("render", "draw a trace as SVG");
  render_cmd->add_option("--trace", render_trace)->required();
  render_cmd->add_option("--out", render_out)->required();
  render_cmd->add_flag("--overlay", render_overlay, "shade cells where the next point loses");

  std::string replay_trace;
  auto* replay_cmd = app.add_subcommand("replay", "replay and check a trace");
  replay_cmd->add_option("--trace", replay_trace)->required();

  std::string host = "127.0.0.1";
  int port = 8080;
  std::string data_dir;
  auto* serve_cmd = app.add_subcommand("serve", "run the HTTP/JSON API");
  serve_cmd->add_option("--host", host);
  serve_cmd->add_option("--port", port);
  serve_cmd->add_option("--data", data_dir, "game directory (default $ESGAME_DATA or ./data)");

  std::vector<const char*> argv{"esgame"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*play_cmd) return play(play_args, in, out);
    if (*verify_cmd) return verify(verify_args, out);
    if (*solve_cmd) return solve(solve_args, out);
    if (*render_cmd) return render(render_trace, render_out, render_overlay, out);
    if (*replay_cmd) return replay(replay_trace, out);
    if (*serve_cmd) {
      if (data_dir.empty()) data_dir = GameService::default_data_dir().string();
      return run_server(host, port, data_dir, err);
    }
  } catch (const Error& e) {
    err << "error (" << error_code_name(e.code()) << "): " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace esg
