#include "esgame/service.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>
#include <vector>

#include "esgame/error.hpp"
#include "esgame/json.hpp"
#include "esgame/sampler.hpp"
#include "esgame/strategy.hpp"

namespace esg {

std::string_view to_string(GameMode m) {
  return m == GameMode::HumanVsEngine ? "human" : "random";
}

GameMode parse_mode(std::string_view text) {
  if (text == "human") return GameMode::HumanVsEngine;
  if (text == "random") return GameMode::EngineVsRandom;
  throw Error(ErrorCode::InvalidArgument,
              "unknown mode '" + std::string(text) + "' (expected human or random)");
}

nlohmann::ordered_json session_to_json(const SessionRecord& s) {
  nlohmann::ordered_json j;
  j["id"] = s.id;
  j["mode"] = to_string(s.mode);
  j["created_at"] = s.created_at;
  if (s.seed) j["seed"] = *s.seed;
  j["trace"] = trace_to_json(s.state);
  return j;
}

SessionRecord session_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("id") || !j.contains("mode") || !j.contains("trace") ||
      !j["id"].is_string() || !j["mode"].is_string()) {
    throw Error(ErrorCode::MalformedTrace, "session record lacks id, mode or trace");
  }
  SessionRecord s;
  s.id = j["id"].get<std::string>();
  s.mode = parse_mode(j["mode"].get<std::string>());
  if (j.contains("created_at") && j["created_at"].is_string()) {
    s.created_at = j["created_at"].get<std::string>();
  }
  if (j.contains("seed") && j["seed"].is_number_unsigned()) s.seed = j["seed"].get<std::uint64_t>();
  s.state = trace_from_json(j["trace"]);
  return s;
}

nlohmann::ordered_json game_view(const SessionRecord& s) {
  nlohmann::ordered_json j;
  j["id"] = s.id;
  j["mode"] = to_string(s.mode);
  j["variant"] = to_string(s.state.variant);
  j["step"] = s.state.step();
  j["to_move"] = s.state.status.finished ? nlohmann::ordered_json(nullptr)
                                          : nlohmann::ordered_json(s.state.to_move());
  j["status"] = status_to_json(s.state.status);
  j["label"] = nullptr;
  if (s.state.step() >= 4 && s.state.step() <= 8) {
    j["label"] = to_string(classify_configuration(s.state.moves));
  }
  j["moves"] = trace_to_json(s.state)["moves"];
  j["created_at"] = s.created_at;
  return j;
}

namespace {

HttpResponse json_response(int status, const nlohmann::ordered_json& body) {
  return HttpResponse{status, body.dump(), "application/json"};
}

HttpResponse error_response(int status, std::string_view code, const std::string& message) {
  nlohmann::ordered_json j;
  j["error"] = code;
  j["message"] = message;
  return json_response(status, j);
}

HttpResponse from_error(const Error& e) {
  int status = 500;
  switch (e.code()) {
    case ErrorCode::GeneralPositionViolation:
    case ErrorCode::DuplicatePoint:
    case ErrorCode::InvalidArgument:
    case ErrorCode::MalformedTrace:
    case ErrorCode::DegenerateInput:
      status = 400;
      break;
    case ErrorCode::GameAlreadyFinished:
      status = 409;
      break;
    default:
      break;
  }
  return error_response(status, error_code_name(e.code()), e.what());
}

nlohmann::json parse_body(std::string_view body) {
  if (body.empty()) return nlohmann::json::object();
  try {
    auto j = nlohmann::json::parse(body);
    if (!j.is_object()) throw Error(ErrorCode::InvalidArgument, "request body must be a JSON object");
    return j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("request body is not valid JSON: ") + e.what());
  }
}

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

bool valid_id(std::string_view id) {
  if (id.empty() || id.size() > 64) return false;
  for (char c : id) {
    const bool ok = (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '-';
    if (!ok) return false;
  }
  return true;
}

std::vector<std::string> split_path(std::string_view path) {
  if (auto q = path.find('?'); q != std::string_view::npos) path = path.substr(0, q);
  std::vector<std::string> parts;
  std::string cur;
  for (char c : path) {
    if (c == '/') {
      if (!cur.empty()) parts.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) parts.push_back(std::move(cur));
  return parts;
}

}  // namespace

GameService::GameService(std::filesystem::path data_dir) : dir_(std::move(data_dir)) {
  std::filesystem::create_directories(dir_);
}

std::filesystem::path GameService::default_data_dir() {
  const char* env = std::getenv("ESGAME_DATA");
  return env && *env ? std::filesystem::path(env) : std::filesystem::path("data");
}

HttpResponse GameService::handle(std::string_view method, std::string_view path,
                                 std::string_view body) {
  const auto parts = split_path(path);
  try {
    if (parts.empty() || parts[0] != "games" || parts.size() > 3) {
      return error_response(404, "not_found", "no such resource");
    }
    if (parts.size() == 1) {
      if (method == "POST") return create(body);
      return error_response(405, "method_not_allowed", "use POST /games");
    }
    const std::string& id = parts[1];
    if (!valid_id(id)) return error_response(404, "not_found", "unknown game id");
    if (parts.size() == 2) {
      if (method == "GET") return get(id);
      if (method == "DELETE") return remove(id);
      return error_response(405, "method_not_allowed", "use GET or DELETE");
    }
    if (parts[2] == "moves") {
      if (method == "POST") return move(id, body);
      return error_response(405, "method_not_allowed", "use POST");
    }
    if (parts[2] == "overlay") {
      if (method == "GET") return overlay(id);
      return error_response(405, "method_not_allowed", "use GET");
    }
    return error_response(404, "not_found", "no such resource");
  } catch (const Error& e) {
    return from_error(e);
  }
}

std::string GameService::fresh_id() {
  static thread_local std::mt19937_64 rng(std::random_device{}());
  while (true) {
    std::ostringstream s;
    s << std::hex << std::setw(12) << std::setfill('0') << (rng() & 0xffffffffffffull);
    const std::string id = s.str();
    std::lock_guard lock(table_mutex_);
    if (!sessions_.count(id) && !std::filesystem::exists(dir_ / (id + ".json"))) return id;
  }
}

void GameService::persist(const SessionRecord& record) const {
  const auto final_path = dir_ / (record.id + ".json");
  const auto tmp = dir_ / (record.id + ".json.tmp");
  {
    std::ofstream out(tmp);
    out << session_to_json(record).dump(2) << "\n";
    if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, final_path);
}

std::shared_ptr<GameService::Session> GameService::find(const std::string& id) {
  std::lock_guard lock(table_mutex_);
  if (auto it = sessions_.find(id); it != sessions_.end()) return it->second;
  const auto file = dir_ / (id + ".json");
  if (!std::filesystem::exists(file)) return nullptr;
  std::ifstream in(file);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::MalformedTrace, "stored game " + id + " is unreadable: " + e.what());
  }
  auto session = std::make_shared<Session>();
  session->record = session_from_json(j);
  sessions_.emplace(id, session);
  return session;
}

HttpResponse GameService::create(std::string_view body) {
  const auto req = parse_body(body);
  const auto text = [&](const char* key, const char* fallback) {
    if (!req.contains(key)) return std::string(fallback);
    if (!req[key].is_string()) throw Error(ErrorCode::InvalidArgument, std::string(key) + " must be a string");
    return req[key].get<std::string>();
  };
  auto session = std::make_shared<Session>();
  SessionRecord& rec = session->record;
  rec.state = new_game(parse_variant(text("variant", "convex")));
  rec.mode = parse_mode(text("mode", "human"));
  rec.created_at = utc_now();
  rec.id = fresh_id();

  if (rec.mode == GameMode::EngineVsRandom) {
    std::uint64_t seed = std::random_device{}();
    if (req.contains("seed")) {
      if (!req["seed"].is_number_unsigned()) throw Error(ErrorCode::InvalidArgument, "seed must be a non-negative integer");
      seed = req["seed"].get<std::uint64_t>();
    }
    rec.seed = seed;
    Rng rng(seed);
    while (!rec.state.status.finished) {
      const Point p = rec.state.to_move() == 2
                          ? choose_move(rec.state.moves, rec.state.variant)
                          : random_adversary_move(rec.state.moves, rec.state.variant, rng);
      apply_move(rec.state, p);
    }
  }
  persist(rec);
  {
    std::lock_guard lock(table_mutex_);
    sessions_.emplace(rec.id, session);
  }
  return json_response(201, game_view(rec));
}

HttpResponse GameService::get(const std::string& id) {
  auto session = find(id);
  if (!session) return error_response(404, "not_found", "unknown game id");
  std::lock_guard lock(session->mutex);
  return json_response(200, game_view(session->record));
}

HttpResponse GameService::move(const std::string& id, std::string_view body) {
  auto session = find(id);
  if (!session) return error_response(404, "not_found", "unknown game id");
  const auto req = parse_body(body);
  const Point p = req.get<Point>();

  std::lock_guard lock(session->mutex);
  SessionRecord& rec = session->record;
  if (rec.mode == GameMode::EngineVsRandom && !rec.state.status.finished) {
    throw Error(ErrorCode::InvalidArgument, "moves are only accepted in human games");
  }
  GameState next = rec.state;
  MoveOutcome outcome = apply_move(next, p);
  if (!next.status.finished && rec.mode == GameMode::HumanVsEngine && next.to_move() == 2) {
    const Point reply = choose_move(next.moves, next.variant);
    const MoveOutcome after = apply_move(next, reply);
    outcome.step = after.step;
    outcome.status = after.status;
    outcome.label = after.label;
    outcome.engine_reply = reply;
  }
  rec.state = std::move(next);
  persist(rec);
  auto j = outcome_to_json(outcome);
  j["game"] = game_view(rec);
  return json_response(200, j);
}

HttpResponse GameService::overlay(const std::string& id) {
  auto session = find(id);
  if (!session) return error_response(404, "not_found", "unknown game id");
  std::lock_guard lock(session->mutex);
  const int step = session->record.state.step();
  if (!session->overlay || session->overlay->first != step) {
    session->overlay.emplace(step, overlay_to_json(compute_overlay(session->record.state)));
  }
  return json_response(200, session->overlay->second);
}

HttpResponse GameService::remove(const std::string& id) {
  auto session = find(id);
  if (!session) return error_response(404, "not_found", "unknown game id");
  std::lock_guard lock(table_mutex_);
  sessions_.erase(id);
  std::filesystem::remove(dir_ / (id + ".json"));
  return HttpResponse{204, "", "application/json"};
}

}  // namespace esg
