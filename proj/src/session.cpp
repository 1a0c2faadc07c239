#include "baker/session.hpp"

#include "baker/io.hpp"

namespace baker {

using nlohmann::json;

namespace {

Player human_seat(const json& config) {
  const std::string h = config.is_object() ? config.value("human", "alice") : "alice";
  if (h == "alice" || h == "A") return Player::Alice;
  if (h == "bob" || h == "B") return Player::Bob;
  throw ConfigError("human must be alice or bob");
}

RunSetup session_setup(json config) {
  if (!config.is_object()) throw ConfigError("game config must be a JSON object");
  // The human seat needs no descriptor; a placeholder keeps resolution uniform.
  if (human_seat(config) == Player::Alice && !config.contains("alice")) config["alice"] = "midpoint-up";
  if (human_seat(config) == Player::Bob && !config.contains("bob")) config["bob"] = "midpoint";
  if (!config.contains("rounds") && !config.contains("N")) config["rounds"] = 100;
  return resolve(run_config_from_json(config));
}

}  // namespace

json interval_json(const Interval& i) { return json{{"lo", i.lo.str()}, {"hi", i.hi.str()}}; }

GameSession::GameSession(const json& config)
    : setup_(session_setup(config)), human_(human_seat(config)), alice_(setup_.alice()), pos_(setup_.domain) {
  alice_->begin(setup_.config.seed);
  advance_machine();
}

bool GameSession::finished() const { return status_ != "ongoing"; }

void GameSession::advance_machine() {
  while (!finished()) {
    if (pos_.to_move() == Player::Alice && pos_.round() >= setup_.config.rounds) {
      status_ = "finished";
      return;
    }
    if (mover_stuck(pos_)) {
      status_ = "aliceStuck";
      return;
    }
    const Player mover = pos_.to_move();
    if (mover == human_) return;
    try {
      Rat x = mover == Player::Alice ? alice_->move(pos_) : setup_.bob->reply(pos_);
      if (!is_legal(pos_, x, mover))
        throw StrategyFault(mover, pos_.round(), "emitted " + x.str() + " outside " + pos_.legal_interval().str());
      moves_.push_back({pos_.round(), mover, x});
      pos_.append(mover, x);
    } catch (const std::exception& e) {
      status_ = "fault";
      fault_ = e.what();
    }
  }
}

json GameSession::state() const {
  json history = json::array();
  for (const auto& m : moves_) history.push_back(move_json(m));
  json s{{"bounds", interval_json(pos_.legal_interval())},
         {"history", history},
         {"toMove", std::string(1, player_code(pos_.to_move()))},
         {"status", status_},
         {"round", pos_.round()},
         {"rounds", setup_.config.rounds},
         {"human", human_ == Player::Alice ? "alice" : "bob"},
         {"alice", alice_->name()},
         {"bob", setup_.bob->name()}};
  if (!fault_.empty()) s["fault"] = fault_;
  return s;
}

GameSession::Reply GameSession::submit(const std::string& value) {
  Rat x;
  try {
    x = Rat::parse(value);
  } catch (const ParseError& e) {
    return {400, json{{"error", e.what()}}};
  }
  const json legal = interval_json(pos_.legal_interval());
  if (finished()) return {409, json{{"error", "game is " + status_}, {"legalInterval", legal}}};
  if (pos_.to_move() != human_) return {409, json{{"error", "not your turn"}, {"legalInterval", legal}}};
  if (!is_legal(pos_, x, human_)) {
    std::string why = pos_.legal_interval().contains(x) ? " is not in the domain " : " is outside ";
    return {409, json{{"error", x.str() + why + pos_.legal_interval().str()}, {"legalInterval", legal}}};
  }
  moves_.push_back({pos_.round(), human_, x});
  pos_.append(human_, x);
  advance_machine();
  return {200, state()};
}

// ---------------------------------------------------------------------------

std::string SessionStore::create(const json& config) {
  GameSession s(config);
  std::lock_guard lock(mutex_);
  std::string id = "g" + std::to_string(next_++);
  sessions_.emplace(id, std::make_shared<Entry>(std::move(s)));
  return id;
}

std::shared_ptr<SessionStore::Entry> SessionStore::find(const std::string& id) {
  std::lock_guard lock(mutex_);
  auto it = sessions_.find(id);
  return it == sessions_.end() ? nullptr : it->second;
}

std::size_t SessionStore::size() const {
  std::lock_guard lock(mutex_);
  return sessions_.size();
}

std::size_t SessionStore::expire(Clock::time_point now) {
  std::lock_guard lock(mutex_);
  std::size_t removed = 0;
  for (auto it = sessions_.begin(); it != sessions_.end();) {
    std::unique_lock entry_lock(it->second->mutex, std::try_to_lock);
    // A session in use is by definition not idle.
    if (entry_lock.owns_lock() && now - it->second->touched > idle_) {
      entry_lock.unlock();
      it = sessions_.erase(it);
      ++removed;
    } else {
      ++it;
    }
  }
  return removed;
}

// ---------------------------------------------------------------------------

GameService::Response GameService::handle(const std::string& method, const std::string& path,
                                          const std::string& body) {
  store_.expire();
  auto not_found = [&] { return Response{404, json{{"error", "no game at " + path}}}; };

  if (path == "/strategies" && method == "GET") return {200, strategy_roster()};

  if (path == "/games" && method == "POST") {
    json config = json::parse(body, nullptr, false);
    if (config.is_discarded()) return {400, json{{"error", "body is not JSON"}}};
    if (config.is_object() && config.contains("config")) config = config["config"];
    if (defaults_.is_object() && config.is_object()) {
      json merged = defaults_;
      merged.update(config);
      config = std::move(merged);
    }
    try {
      std::string id = store_.create(config);
      json state = *store_.with(id, [](GameSession& s) { return s.state(); });
      return {201, json{{"id", id}, {"state", state}}};
    } catch (const ConfigError& e) {
      return {400, json{{"error", e.what()}}};
    }
  }

  if (path == "/strategies" || path == "/games") return {405, json{{"error", method + " not allowed on " + path}}};

  const std::string prefix = "/games/";
  if (!path.starts_with(prefix)) return not_found();
  std::string rest = path.substr(prefix.size());
  const std::string moves_suffix = "/moves";
  const bool is_moves = rest.ends_with(moves_suffix);
  const std::string id = is_moves ? rest.substr(0, rest.size() - moves_suffix.size()) : rest;
  if (id.empty() || id.find('/') != std::string::npos) return not_found();

  if (!is_moves && method == "GET") {
    auto state = store_.with(id, [](GameSession& s) { return s.state(); });
    if (!state) return not_found();
    json out = *state;
    out["id"] = id;
    return {200, out};
  }
  if (is_moves && method == "POST") {
    json req = json::parse(body, nullptr, false);
    if (req.is_discarded() || !req.is_object() || !req.contains("value") || !req["value"].is_string())
      return {400, json{{"error", "body must be {\"value\": \"num/den\"}"}}};
    auto reply = store_.with(id, [&](GameSession& s) { return s.submit(req["value"].get<std::string>()); });
    if (!reply) return not_found();
    if (reply->status == 200) reply->body["id"] = id;
    return {reply->status, reply->body};
  }
  return {405, json{{"error", method + " not allowed on " + path}}};
}

}  // namespace baker
