#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "baker/domain.hpp"
#include "baker/numeric.hpp"

namespace baker {

enum class Player : std::uint8_t { Alice, Bob };

inline char player_code(Player p) { return p == Player::Alice ? 'A' : 'B'; }
Player parse_player(std::string_view code);

enum class GameKind : std::uint8_t { Cantor, Baker };

std::string game_kind_name(GameKind k);
GameKind parse_game_kind(std::string_view name);

class GameError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IllegalMove : public GameError {
 public:
  IllegalMove(Player player, Rat value, Interval bounds, std::string why);
  Player player;
  Rat value;
  Interval bounds;
};

class OutOfTurn : public GameError {
 public:
  explicit OutOfTurn(Player p);
  Player player;
};

class StrategyFault : public GameError {
 public:
  StrategyFault(Player player, std::size_t round, const std::string& detail);
  Player player;
  std::size_t round;
};

class NoRounds : public GameError {
 public:
  NoRounds() : GameError("no completed round") {}
};

struct Move {
  std::size_t round = 0;
  Player player = Player::Alice;
  Rat value;

  friend bool operator==(const Move&, const Move&) = default;
};

/// Alternating play state: Alice's increasing moves, Bob's decreasing moves,
/// every Alice move below every Bob move.
class Position {
 public:
  explicit Position(std::shared_ptr<const OrderedDomain> domain);

  const OrderedDomain& domain() const { return *domain_; }
  const std::shared_ptr<const OrderedDomain>& domain_ptr() const { return domain_; }

  std::span<const Rat> alice() const { return alice_; }
  std::span<const Rat> bob() const { return bob_; }

  /// Completed rounds.
  std::size_t round() const { return bob_.size(); }
  Player to_move() const { return alice_.size() == bob_.size() ? Player::Alice : Player::Bob; }

  ExtRat last_alice() const { return alice_.empty() ? ExtRat::neg_inf() : ExtRat(alice_.back()); }
  ExtRat last_bob() const { return bob_.empty() ? ExtRat::pos_inf() : ExtRat(bob_.back()); }

  /// Open region of legal numbers: (last Alice move, last Bob move). For Bob
  /// mid-round the pending Alice move is the lower bound.
  Interval legal_interval() const { return {last_alice(), last_bob()}; }

  void append(Player p, Rat x);

 private:
  std::shared_ptr<const OrderedDomain> domain_;
  std::vector<Rat> alice_;
  std::vector<Rat> bob_;
};

bool is_legal(const Position& pos, const Rat& x, Player player);

/// Returns the position after `player` plays x. Throws OutOfTurn or
/// IllegalMove; never clamps.
Position step(const Position& pos, const Rat& x, Player player);

/// Mover has no legal element of the domain.
bool mover_stuck(const Position& pos);

class AliceStrategy {
 public:
  virtual ~AliceStrategy() = default;
  virtual std::string name() const = 0;
  /// Resets private state before a play.
  virtual void begin(std::uint64_t /*seed*/) {}
  virtual Rat move(const Position& pos) = 0;
};

enum class BobKind : std::uint8_t { Full, RoundIndexed, Coding };

/// Bob strategies are immutable and pure; any randomness is fixed at
/// construction, so one instance may serve many concurrent plays.
class BobStrategy {
 public:
  virtual ~BobStrategy() = default;
  virtual std::string name() const = 0;
  virtual BobKind kind() const = 0;
  virtual Rat reply(const Position& pos) const = 0;
};

/// sigma(t): sees Alice's whole history.
class BobFullStrategy : public BobStrategy {
 public:
  BobKind kind() const final { return BobKind::Full; }
  virtual Rat respond(std::span<const Rat> alice_history) const = 0;
  Rat reply(const Position& pos) const final { return respond(pos.alice()); }
};

/// Sees the most recent move of each player plus the round index.
class BobRoundStrategy : public BobStrategy {
 public:
  BobKind kind() const final { return BobKind::RoundIndexed; }
  virtual Rat respond(const ExtRat& last_bob, const Rat& last_alice, std::size_t round) const = 0;
  Rat reply(const Position& pos) const final;
};

/// sigma(beta, a): sees only the most recent move of each player.
class BobCodingStrategy : public BobStrategy {
 public:
  BobKind kind() const final { return BobKind::Coding; }
  virtual Rat respond(const ExtRat& last_bob, const Rat& last_alice) const = 0;
  Rat reply(const Position& pos) const final;
};

enum class Verdict : std::uint8_t { Truncated, AliceLosesImmediately };

struct Transcript {
  std::string domain_name;
  GameKind game = GameKind::Baker;
  std::uint64_t seed = 0;
  std::size_t rounds_requested = 0;
  std::vector<Move> moves;
  Verdict verdict = Verdict::Truncated;
  /// Set when verdict is AliceLosesImmediately.
  std::optional<Player> stuck_player;

  std::size_t completed_rounds() const;
};

/// Rebuilds a position from a move log through the referee. Throws
/// IllegalMove / OutOfTurn on an inconsistent log, GameError on bad rounds.
Position replay(std::span<const Move> moves, std::shared_ptr<const OrderedDomain> domain);

Transcript play_truncated(AliceStrategy& alice, const BobStrategy& bob, std::size_t rounds,
                          std::shared_ptr<const OrderedDomain> domain, std::uint64_t seed,
                          GameKind game = GameKind::Baker);

/// b_last - a_last over completed rounds (PosInf when unbounded).
ExtRat width(const Transcript& tr);

/// Per-completed-round (a_n, b_n).
struct RoundBounds {
  Rat alice;
  Rat bob;
  friend bool operator==(const RoundBounds&, const RoundBounds&) = default;
};

std::vector<RoundBounds> round_bounds(std::span<const Move> moves);

}  // namespace baker
