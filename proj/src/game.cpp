#include "baker/game.hpp"

#include <exception>

namespace baker {

Player parse_player(std::string_view code) {
  if (code == "A") return Player::Alice;
  if (code == "B") return Player::Bob;
  throw ParseError("unknown player '" + std::string(code) + "'");
}

std::string game_kind_name(GameKind k) { return k == GameKind::Cantor ? "cantor" : "baker"; }

GameKind parse_game_kind(std::string_view name) {
  if (name == "cantor") return GameKind::Cantor;
  if (name == "baker") return GameKind::Baker;
  throw ParseError("unknown game '" + std::string(name) + "'");
}

IllegalMove::IllegalMove(Player p, Rat v, Interval b, std::string why)
    : GameError(std::string("illegal move by ") + player_code(p) + ": " + v.str() + " not in " + b.str() +
                (why.empty() ? "" : " (" + why + ")")),
      player(p),
      value(std::move(v)),
      bounds(std::move(b)) {}

OutOfTurn::OutOfTurn(Player p) : GameError(std::string("out of turn: ") + player_code(p)), player(p) {}

StrategyFault::StrategyFault(Player p, std::size_t r, const std::string& detail)
    : GameError(std::string("strategy fault by ") + player_code(p) + " in round " + std::to_string(r) + ": " +
                detail),
      player(p),
      round(r) {}

Position::Position(std::shared_ptr<const OrderedDomain> domain) : domain_(std::move(domain)) {
  if (!domain_) throw std::invalid_argument("position needs a domain");
}

void Position::append(Player p, Rat x) {
  if (p == Player::Alice)
    alice_.push_back(std::move(x));
  else
    bob_.push_back(std::move(x));
}

bool is_legal(const Position& pos, const Rat& x, Player player) {
  // Both players face the same open region; mid-round the pending Alice
  // move is already the lower bound.
  return pos.to_move() == player && pos.domain().contains(x) && pos.legal_interval().contains(x);
}

Position step(const Position& pos, const Rat& x, Player player) {
  if (pos.to_move() != player) throw OutOfTurn(player);
  if (!pos.domain().contains(x))
    throw IllegalMove(player, x, pos.legal_interval(), "not in domain " + pos.domain().canonical_name());
  if (!pos.legal_interval().contains(x)) throw IllegalMove(player, x, pos.legal_interval(), "");
  Position next = pos;
  next.append(player, x);
  return next;
}

bool mover_stuck(const Position& pos) { return !pos.domain().pick_between(pos.legal_interval()).has_value(); }

Rat BobRoundStrategy::reply(const Position& pos) const {
  return respond(pos.last_bob(), pos.alice().back(), pos.round());
}

Rat BobCodingStrategy::reply(const Position& pos) const { return respond(pos.last_bob(), pos.alice().back()); }

std::size_t Transcript::completed_rounds() const {
  std::size_t bob_moves = 0;
  for (const Move& m : moves) bob_moves += m.player == Player::Bob ? 1 : 0;
  return bob_moves;
}

Position replay(std::span<const Move> moves, std::shared_ptr<const OrderedDomain> domain) {
  Position pos(std::move(domain));
  for (const Move& m : moves) {
    if (m.round != pos.round()) {
      throw GameError("move log out of sequence: round " + std::to_string(m.round) + " logged, " +
                      std::to_string(pos.round()) + " expected");
    }
    pos = step(pos, m.value, m.player);
  }
  return pos;
}

namespace {

Rat ask(Player who, std::size_t round, const auto& produce) {
  try {
    return produce();
  } catch (const StrategyFault&) {
    throw;
  } catch (const std::exception& e) {
    throw StrategyFault(who, round, e.what());
  }
}

}  // namespace

Transcript play_truncated(AliceStrategy& alice, const BobStrategy& bob, std::size_t rounds,
                          std::shared_ptr<const OrderedDomain> domain, std::uint64_t seed, GameKind game) {
  Transcript tr;
  tr.domain_name = domain->canonical_name();
  tr.game = game;
  tr.seed = seed;
  tr.rounds_requested = rounds;

  Position pos(std::move(domain));
  alice.begin(seed);

  auto take = [&](Player who, const Rat& x) {
    if (!is_legal(pos, x, who)) {
      throw StrategyFault(who, pos.round(),
                          "emitted " + x.str() + " outside legal region " + pos.legal_interval().str());
    }
    tr.moves.push_back({pos.round(), who, x});
    pos.append(who, x);
  };

  for (std::size_t n = 0; n < rounds; ++n) {
    if (mover_stuck(pos)) {
      tr.verdict = Verdict::AliceLosesImmediately;
      tr.stuck_player = Player::Alice;
      return tr;
    }
    take(Player::Alice, ask(Player::Alice, n, [&] { return alice.move(pos); }));

    if (mover_stuck(pos)) {
      tr.verdict = Verdict::AliceLosesImmediately;
      tr.stuck_player = Player::Bob;
      return tr;
    }
    take(Player::Bob, ask(Player::Bob, n, [&] { return bob.reply(pos); }));
  }
  return tr;
}

std::vector<RoundBounds> round_bounds(std::span<const Move> moves) {
  std::vector<RoundBounds> out;
  const Rat* pending = nullptr;
  for (const Move& m : moves) {
    if (m.player == Player::Alice) {
      pending = &m.value;
    } else if (pending) {
      out.push_back({*pending, m.value});
      pending = nullptr;
    }
  }
  return out;
}

ExtRat width(const Transcript& tr) {
  auto bounds = round_bounds(tr.moves);
  if (bounds.empty()) throw NoRounds();
  return bounds.back().bob - bounds.back().alice;
}

}  // namespace baker
