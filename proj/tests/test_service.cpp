#include <doctest.h>

#include <filesystem>
#include <nlohmann/json.hpp>
#include <random>

#include "esgame/service.hpp"

using namespace esg;
using nlohmann::json;

namespace {

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("esgame-test-" + std::to_string(std::random_device{}()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

json body(const HttpResponse& r) { return json::parse(r.body); }

std::string move_body(const char* x, const char* y) {
  return json{{"x", x}, {"y", y}}.dump();
}

}  // namespace

TEST_CASE("create and fetch a game") {
  TempDir dir;
  GameService svc(dir.path);
  const auto created = svc.handle("POST", "/games", R"({"variant":"empty","mode":"human"})");
  CHECK(created.status == 201);
  const auto j = body(created);
  const std::string id = j["id"];
  CHECK(id.size() == 12);
  CHECK(j["variant"] == "empty");
  CHECK(j["step"] == 0);
  CHECK(std::filesystem::exists(dir.path / (id + ".json")));

  const auto got = svc.handle("GET", "/games/" + id, "");
  CHECK(got.status == 200);
  CHECK(body(got)["id"] == id);
}

TEST_CASE("error codes") {
  TempDir dir;
  GameService svc(dir.path);
  CHECK(svc.handle("GET", "/games/abc123", "").status == 404);
  CHECK(body(svc.handle("GET", "/games/abc123", ""))["error"] == "not_found");
  CHECK(svc.handle("GET", "/nothing", "").status == 404);
  CHECK(svc.handle("PUT", "/games", "").status == 405);
  CHECK(svc.handle("POST", "/games", R"({"variant":"heptagon"})").status == 400);
  CHECK(svc.handle("POST", "/games", "{oops").status == 400);

  const std::string id = body(svc.handle("POST", "/games", R"({"variant":"convex"})"))["id"];
  const std::string path = "/games/" + id + "/moves";
  // (0,0) then the engine's (1,0); (2,0) is collinear with both.
  CHECK(svc.handle("POST", path, move_body("0", "0")).status == 200);
  const auto bad = svc.handle("POST", path, move_body("2", "0"));
  CHECK(bad.status == 400);
  CHECK(body(bad)["error"] == "general_position");
  CHECK(body(svc.handle("POST", path, move_body("1", "0")))["error"] == "duplicate_point");
  CHECK(body(svc.handle("POST", path, R"({"x":"1"})"))["error"] == "invalid_argument");
  CHECK(body(svc.handle("GET", "/games/" + id, ""))["step"] == 2);
}

TEST_CASE("human game against the engine ends at step 9") {
  TempDir dir;
  GameService svc(dir.path);
  const std::string id = body(svc.handle("POST", "/games", R"({"variant":"convex","mode":"human"})"))["id"];
  const std::string path = "/games/" + id + "/moves";
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<int> coord(-9999, 9999);
  int human_moves = 0;
  json last;
  while (true) {
    const auto state = body(svc.handle("GET", "/games/" + id, ""));
    if (state["status"] != "ongoing") break;
    const std::string x = std::to_string(coord(rng)) + "/100";
    const std::string y = std::to_string(coord(rng)) + "/100";
    const auto r = svc.handle("POST", path, json{{"x", x}, {"y", y}}.dump());
    if (r.status != 200) continue;  // collinear pick, try another
    ++human_moves;
    last = body(r);
  }
  const auto final_state = body(svc.handle("GET", "/games/" + id, ""));
  CHECK(human_moves == 5);
  CHECK(final_state["step"] == 9);
  CHECK(final_state["status"]["loser"] == 1);
  CHECK(last["status"]["loser"] == 1);
  CHECK(svc.handle("POST", path, move_body("77", "78")).status == 409);
  CHECK(body(svc.handle("POST", path, move_body("77", "78")))["error"] == "game_finished");
}

TEST_CASE("coordinates come back exactly") {
  TempDir dir;
  GameService svc(dir.path);
  const std::string id = body(svc.handle("POST", "/games", "{}"))["id"];
  const auto r = body(svc.handle("POST", "/games/" + id + "/moves", move_body("0.125", "-6/4")));
  const auto moves = r["game"]["moves"];
  CHECK(moves[0]["x"] == "1/8");
  CHECK(moves[0]["y"] == "-3/2");
}

TEST_CASE("random games, overlays, persistence and deletion") {
  TempDir dir;
  std::string id;
  json before;
  {
    GameService svc(dir.path);
    const auto r = svc.handle("POST", "/games", R"({"variant":"empty","mode":"random","seed":5})");
    CHECK(r.status == 201);
    before = body(r);
    id = before["id"];
    CHECK(before["step"] == 9);
    CHECK(before["status"]["loser"] == 1);
    const auto overlay = svc.handle("GET", "/games/" + id + "/overlay", "");
    CHECK(overlay.status == 200);
    CHECK(body(overlay)["losing_regions"].empty());
    CHECK(svc.handle("POST", "/games/" + id + "/moves", move_body("1", "2")).status == 409);
  }
  GameService reopened(dir.path);
  const auto again = body(reopened.handle("GET", "/games/" + id, ""));
  CHECK(again == before);
  CHECK(reopened.handle("DELETE", "/games/" + id, "").status == 204);
  CHECK(reopened.handle("GET", "/games/" + id, "").status == 404);
  CHECK_FALSE(std::filesystem::exists(dir.path / (id + ".json")));
}

TEST_CASE("overlay before move 4 is empty and at step 4 is partial") {
  TempDir dir;
  GameService svc(dir.path);
  const std::string id = body(svc.handle("POST", "/games", R"({"variant":"empty"})"))["id"];
  CHECK(body(svc.handle("GET", "/games/" + id + "/overlay", ""))["losing_regions"].empty());
  svc.handle("POST", "/games/" + id + "/moves", move_body("0", "0"));
  svc.handle("POST", "/games/" + id + "/moves", move_body("3", "5"));
  const auto o = body(svc.handle("GET", "/games/" + id + "/overlay", ""));
  CHECK(o["step"] == 4);
  CHECK(o["label"] == "4");
  CHECK(!o["losing_regions"].empty());
  CHECK(o["losing_regions"].size() < o["cell_count"].get<std::size_t>());
}
