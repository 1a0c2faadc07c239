#pragma once

#include <chrono>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include <json.hpp>

#include "baker/config.hpp"

namespace baker {

/// One human-versus-machine game. Not thread-safe on its own; the store
/// serializes access per session.
class GameSession {
 public:
  /// `config` is a run config whose human seat may omit its descriptor.
  /// "human" selects the seat ("alice" by default). Throws ConfigError.
  explicit GameSession(const nlohmann::json& config);

  struct Reply {
    int status = 200;
    nlohmann::json body;
  };

  /// {bounds, history, toMove, status, round, rounds, human}.
  nlohmann::json state() const;
  /// Applies the human move then lets the machine answer.
  Reply submit(const std::string& value);

  Player human() const { return human_; }
  const Position& position() const { return pos_; }

 private:
  void advance_machine();
  bool finished() const;

  RunSetup setup_;
  Player human_ = Player::Alice;
  std::unique_ptr<AliceStrategy> alice_;
  Position pos_;
  std::vector<Move> moves_;
  std::string status_ = "ongoing";
  std::string fault_;
};

nlohmann::json interval_json(const Interval& i);

/// Sessions keyed by id, dropped after `idle` without requests.
class SessionStore {
 public:
  using Clock = std::chrono::steady_clock;

  explicit SessionStore(std::chrono::seconds idle = std::chrono::minutes(30)) : idle_(idle) {}

  std::string create(const nlohmann::json& config);

  /// Runs `fn` on the session under its lock; nullopt for an unknown id.
  template <class Fn>
  auto with(const std::string& id, Fn&& fn) -> std::optional<decltype(fn(std::declval<GameSession&>()))> {
    auto e = find(id);
    if (!e) return std::nullopt;
    std::lock_guard lock(e->mutex);
    e->touched = Clock::now();
    return fn(e->session);
  }

  std::size_t size() const;
  /// Removes sessions idle longer than the limit as of `now`.
  std::size_t expire(Clock::time_point now = Clock::now());

 private:
  struct Entry {
    explicit Entry(GameSession s) : session(std::move(s)), touched(Clock::now()) {}
    std::mutex mutex;
    GameSession session;
    Clock::time_point touched;
  };
  std::shared_ptr<Entry> find(const std::string& id);

  std::chrono::seconds idle_;
  mutable std::mutex mutex_;
  std::map<std::string, std::shared_ptr<Entry>> sessions_;
  std::uint64_t next_ = 1;
};

/// Transport-independent request handler for the game protocol.
class GameService {
 public:
  explicit GameService(std::chrono::seconds idle = std::chrono::minutes(30), nlohmann::json defaults = {})
      : store_(idle), defaults_(std::move(defaults)) {}

  struct Response {
    int status = 200;
    nlohmann::json body;
  };

  Response handle(const std::string& method, const std::string& path, const std::string& body);
  SessionStore& store() { return store_; }

 private:
  SessionStore store_;
  nlohmann::json defaults_;
};

}  // namespace baker
