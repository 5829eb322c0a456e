// Acceptance run: one PASS/FAIL line per criterion. Every check is exact
// (tolerance 0); sample counts and seeds are fixed below.

#include <chrono>
#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "esgame/hull.hpp"
#include "esgame/patterns.hpp"
#include "esgame/strategy.hpp"
#include "esgame/verifier.hpp"
#include "oracles.hpp"

using namespace esg;

namespace {

constexpr std::uint64_t kSeed = 20261017;
constexpr int kSimulatedGames = 10'000;
constexpr int kNinePointSamples = 10'000;
constexpr int kSmallSamples = 10'000;
constexpr int kLayeredSamples = 10'000;
constexpr int kClosureSamples = 1'000;
constexpr int kOracleInstances = 10'000;

struct Criterion {
  int number;
  std::string name;
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void report(Criterion& c, std::chrono::steady_clock::time_point t0) {
  std::printf("criterion %d: %s  %s (%.1fs)%s\n", c.number, c.pass ? "PASS" : "FAIL", c.name.c_str(),
              seconds_since(t0), c.detail.str().c_str());
  std::fflush(stdout);
}

bool verified(const VerificationReport& r, Criterion& c) {
  const bool ok = r.verdict == Verdict::Verified;
  c.require(ok, r.lemma + "/" + r.scope + " " + std::string(to_string(r.verdict)) +
                    (r.counterexample ? " " + r.counterexample->dump() : ""));
  return ok;
}

std::vector<std::string> split_path(const std::string& path) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : path) {
    if (ch == '>') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

int main() {
  std::printf("tolerance: exact rational arithmetic, zero tolerance on every count; seed %llu\n",
              static_cast<unsigned long long>(kSeed));

  // 1 and 6 share the strategy-tree walk.
  Criterion c1{1, "strategy tree: every line from the canonical triangle ends at step 9, player 1 loses"};
  Criterion c6{6, "labels follow 4 > {5.1,5.2} > {6.1,6.2} > {7.1,7.2} > 8 on every branch"};
  std::vector<VerificationReport> trees;
  auto t0 = std::chrono::steady_clock::now();
  for (Variant v : {Variant::Convex, Variant::Empty}) {
    trees.push_back(verify_strategy_tree(v));
    const auto& r = trees.back();
    verified(r, c1);
    c1.require(r.stats["deepest_step"] == 9, "deepest step is not 9");
    c1.require(r.items > 0, "no leaves");
    c1.detail << " " << to_string(v) << ": " << r.items << " leaves, "
              << r.stats["positions_step5"] << "+" << r.stats["positions_step7"]
              << " adversary cells at steps 5+7;";
  }
  report(c1, t0);

  // 2
  t0 = std::chrono::steady_clock::now();
  Criterion c2{2, "10^4 random-adversary games per variant all end at step 9 with player 1 losing"};
  for (Variant v : {Variant::Convex, Variant::Empty}) {
    const auto r = simulate_games(v, kSimulatedGames, kSeed);
    verified(r, c2);
    const auto& ends = r.stats["end_steps"];
    c2.require(ends.size() == 1 && ends.contains("9") && ends["9"] == kSimulatedGames,
               "end steps " + ends.dump());
    c2.detail << " " << to_string(v) << " end steps " << ends.dump() << ";";
  }
  report(c2, t0);

  // 3: the known small game values.
  t0 = std::chrono::steady_clock::now();
  Criterion c3{3, "solver: N_G(3)=H_G(3)=3 and N_G(4)=H_G(4)=5"};
  for (Variant v : {Variant::Convex, Variant::Empty}) {
    const int k3 = game_length(3, v);
    const int k4 = game_length(4, v);
    c3.require(k3 == 3, std::string(to_string(v)) + " k=3 gives " + std::to_string(k3));
    c3.require(k4 == 5, std::string(to_string(v)) + " k=4 gives " + std::to_string(k4));
    c3.detail << " " << to_string(v) << ": " << k3 << "," << k4 << ";";
  }
  report(c3, t0);

  // 4
  t0 = std::chrono::steady_clock::now();
  Criterion c4{4, "every sampled 9-point set has a convex 5-gon; a configuration-8 set has none"};
  {
    const auto r = verify_nine_points(kNinePointSamples, kSeed);
    verified(r, c4);
    c4.require(r.items == kNinePointSamples, "sample count");
    const auto eight = config8_samples(1, kSeed).front();
    c4.require(oracle::count_kgons(eight, 5, false) == 0, "oracle finds a convex 5-gon in the 8-point set");
    c4.detail << " " << r.items << " sets; 8-point set " << r.stats["config8_without_convex_5gon"].dump();
  }
  report(c4, t0);

  // 5
  t0 = std::chrono::steady_clock::now();
  Criterion c5{5, "lemma suite: small sets, (4,3,2), (4,4,1), configuration-8 closure"};
  {
    for (Variant v : {Variant::Convex, Variant::Empty}) {
      for (int n : {4, 6}) {
        const auto r = verify_no_bad_small(n, v, kSmallSamples, kSeed);
        verified(r, c5);
        c5.require(r.items == static_cast<std::uint64_t>(kSmallSamples), "sample count");
        if (n == 6) {
          const auto cases = r.stats.value("three_three_cases", nlohmann::ordered_json::object());
          bool all_five = cases.value("other", 1) == 0;
          for (const char* name : {"(I,I,I)", "(O,O,O)", "(I,I,O)", "(O,O,I)", "(2I,O)"})
            all_five = all_five && cases.value(name, 0) > 0;
          c5.require(all_five, "(3,3) sub-cases " + cases.dump());
        }
      }
    }
    for (const LayerType& sig : {LayerType{{4, 3, 2}}, LayerType{{4, 4, 1}}}) {
      const auto r = verify_layered_lemma(sig, kLayeredSamples, kSeed);
      verified(r, c5);
      c5.require(r.items == static_cast<std::uint64_t>(kLayeredSamples), "sample count");
    }
    const auto samples = config8_samples(kClosureSamples, kSeed);
    const auto closure = verify_config8_closure(samples);
    verified(closure, c5);
    c5.require(samples.size() == static_cast<std::size_t>(kClosureSamples), "closure sample count");
    c5.require(closure.stats["beam_count_violations"] == 0, "beam counting");
    c5.detail << " closure cells " << closure.stats["cells"] << ", outer cells in beams "
              << closure.stats["outer_cells_in_beams"];
  }
  report(c5, t0);

  // 6: from the tree walks of criterion 1.
  t0 = std::chrono::steady_clock::now();
  {
    const std::vector<std::set<std::string>> levels{
        {"4"}, {"5.1", "5.2"}, {"6.1", "6.2"}, {"7.1", "7.2"}, {"8"}};
    for (const auto& r : trees) {
      c6.require(r.verdict == Verdict::Verified, "tree walk did not verify");
      const auto& paths = r.stats["label_paths"];
      c6.require(!paths.empty(), "no label paths");
      std::uint64_t leaves = 0;
      for (const auto& [path, count] : paths.items()) {
        const auto labels = split_path(path);
        bool ok = labels.size() == levels.size();
        for (std::size_t i = 0; ok && i < labels.size(); ++i) ok = levels[i].count(labels[i]) > 0;
        c6.require(ok, "path " + path);
        leaves += count.get<std::uint64_t>();
      }
      c6.require(leaves == r.items, "paths do not cover every leaf");
      c6.detail << " " << r.scope << " " << paths.dump() << ";";
    }
  }
  report(c6, t0);

  // 7
  t0 = std::chrono::steady_clock::now();
  Criterion c7{7, "hulls, layers and both detectors match brute-force oracles"};
  {
    std::mt19937_64 rng(kSeed);
    std::map<std::string, int> mismatches;
    for (int t = 0; t < kOracleInstances; ++t) {
      const int n = 3 + t % 8;
      const int range = (t / 8) % 2 ? 8 : 1000;
      const auto pts = oracle::random_set(n, rng, range, (t / 16) % 2 == 1);
      std::set<std::pair<Rational, Rational>> got, want;
      for (const auto& p : convex_hull(pts)) got.emplace(p.x, p.y);
      for (int i : oracle::hull_members(pts, oracle::all_ids(pts.size()))) want.emplace(pts[i].x, pts[i].y);
      if (got != want) ++mismatches["hull"];
      if (layer_type(pts).sizes != oracle::layer_sizes(pts)) ++mismatches["layers"];
      if (n >= 5) {
        if (find_convex_5gon(pts).has_value() != (oracle::count_kgons(pts, 5, false) > 0))
          ++mismatches["convex_5gon"];
        if (find_empty_convex_5gon(pts).has_value() != (oracle::count_kgons(pts, 5, true) > 0))
          ++mismatches["empty_convex_5gon"];
      }
    }
    for (const auto& [what, count] : mismatches) c7.require(false, what + " x" + std::to_string(count));
    c7.detail << " " << kOracleInstances << " instances, n in 3..10";
  }
  report(c7, t0);

  const bool all = c1.pass && c2.pass && c3.pass && c4.pass && c5.pass && c6.pass && c7.pass;
  std::printf("acceptance: %s\n", all ? "all criteria pass" : "some criteria fail");
  return all ? 0 : 1;
}
