#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "esgame/referee.hpp"
#include "esgame/render.hpp"

namespace esg {

enum class GameMode { HumanVsEngine, EngineVsRandom };

std::string_view to_string(GameMode m);
GameMode parse_mode(std::string_view text);  // "human" or "random"

struct SessionRecord {
  std::string id;
  GameState state;
  GameMode mode = GameMode::HumanVsEngine;
  std::string created_at;  // UTC, ISO 8601
  std::optional<std::uint64_t> seed;  // random opponent of EngineVsRandom games
};

nlohmann::ordered_json session_to_json(const SessionRecord& s);
SessionRecord session_from_json(const nlohmann::json& j);

struct HttpResponse {
  int status = 200;
  std::string body;
  std::string content_type = "application/json";
};

// The JSON API behind the HTTP server, callable without a socket. Games are
// kept as JSON files in the data directory and loaded on first access.
// Requests for different games run concurrently; requests for one game are
// serialized.
class GameService {
 public:
  explicit GameService(std::filesystem::path data_dir);

  HttpResponse handle(std::string_view method, std::string_view path, std::string_view body);

  // ESGAME_DATA, or ./data when unset.
  static std::filesystem::path default_data_dir();

 private:
  struct Session {
    std::mutex mutex;
    SessionRecord record;
    std::optional<std::pair<int, nlohmann::ordered_json>> overlay;  // cached by step
  };

  HttpResponse create(std::string_view body);
  HttpResponse get(const std::string& id);
  HttpResponse move(const std::string& id, std::string_view body);
  HttpResponse overlay(const std::string& id);
  HttpResponse remove(const std::string& id);

  std::shared_ptr<Session> find(const std::string& id);
  void persist(const SessionRecord& record) const;
  std::string fresh_id();

  std::filesystem::path dir_;
  std::mutex table_mutex_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  std::uint64_t counter_ = 0;
};

nlohmann::ordered_json game_view(const SessionRecord& s);

}  // namespace esg
