#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "baker/codec.hpp"
#include "baker/game.hpp"
#include "baker/payoff.hpp"

namespace baker {

using BobPtr = std::shared_ptr<const BobStrategy>;
using BobFullPtr = std::shared_ptr<const BobFullStrategy>;
using BobRoundPtr = std::shared_ptr<const BobRoundStrategy>;
using BobCodingPtr = std::shared_ptr<const BobCodingStrategy>;

/// Raised when a coding strategy sees a finite previous move that carries no
/// frame, i.e. it was not in control of Bob's moves from the start.
class DecodeFault : public GameError {
 public:
  using GameError::GameError;
};

/// Raised by folded full-information strategies on a history that is not a
/// legal play against them.
class IllegalHistory : public GameError {
 public:
  using GameError::GameError;
};

// ---------------------------------------------------------------------------
// Full-information strategies defined by a left fold over Alice's history.

class BobStepper {
 public:
  virtual ~BobStepper() = default;
  /// Bob's reply to Alice's next move. Checks legality of both moves.
  Rat step(const Rat& alice_move);
  const ExtRat& last_bob() const { return last_bob_; }
  std::size_t round() const { return round_; }

 protected:
  virtual Rat next(const Rat& alice_move, const ExtRat& last_bob, std::size_t round) = 0;

 private:
  ExtRat last_bob_ = ExtRat::pos_inf();
  std::size_t round_ = 0;
};

class FoldedBob : public BobFullStrategy {
 public:
  virtual std::unique_ptr<BobStepper> start() const = 0;
  Rat respond(std::span<const Rat> alice_history) const final;
};

/// sigma(t) folds the round-indexed rule over t.
BobFullPtr lift_full(BobRoundPtr inner);
/// sigma(t) folds the coding rule over t.
BobFullPtr lift_full(BobCodingPtr inner);
BobFullPtr as_full(BobPtr inner);

/// min of two full strategies' replies; legal whenever both are.
BobFullPtr min_of(BobFullPtr first, BobFullPtr second);

/// Random legal replies drawn from a generator replayed from `seed`, so the
/// strategy stays a pure function of the history.
BobFullPtr random_bob(std::uint64_t seed, std::shared_ptr<const OrderedDomain> domain = nullptr);

// ---------------------------------------------------------------------------
// Coding and round-indexed strategies.

/// domain.pick_between(a, beta): the midpoint, or a+1 while beta is infinite.
BobCodingPtr midpoint_bob(std::shared_ptr<const OrderedDomain> domain = nullptr);

/// a + fraction * (beta - a), a + 1 while beta is infinite. 0 < fraction < 1.
BobCodingPtr fraction_bob(const Rat& fraction);

/// Round-indexed enumeration strategy: plays w_n while it is legal, else
/// pick_between(a, beta).
BobRoundPtr enumeration_bob(PayoffSet w, std::shared_ptr<const OrderedDomain> domain = nullptr);

/// Single-round decision of the enumeration strategy.
Rat enumeration_move(const PayoffSet& w, std::size_t round, const ExtRat& last_alice, const ExtRat& last_bob,
                     const OrderedDomain& domain);

/// Strict coding version: the round index travels inside Bob's own moves.
/// When w_n is legal Bob plays an encoded number in (a, w_n), which is
/// smaller than w_n and so also makes it illegal.
BobCodingPtr enumeration_coding_bob(PayoffSet w);

/// Round index carried by a move of enumeration_coding_bob (0 for +inf).
std::size_t decode_round(const ExtRat& last_bob);

// ---------------------------------------------------------------------------
// Transforms.

/// Caps the inner move at a + 1/(n+1) (re-legalized to the midpoint of the
/// legal region when that cap reaches Bob's last move). Round-indexed
/// strategies stay round-indexed. Full and coding strategies come back full:
/// a coding strategy cannot see n, and it must keep reading its own unwrapped
/// moves.
BobPtr shrink_wrap(BobPtr inner);
BobFullPtr shrink_wrap_full(BobFullPtr inner);

/// Single-round shrink decision.
Rat shrink_move(const Rat& inner_move, const Rat& last_alice, const ExtRat& last_bob, std::size_t round);

/// Replaces the inner move by the dyadic of least denominator in
/// (a, inner move], taking the largest such dyadic.
/// Kinds carry over as for shrink_wrap.
BobPtr rationalize_wrap(BobPtr inner);
BobFullPtr rationalize_wrap_full(BobFullPtr inner);

Rat rationalize_move(const Rat& inner_move, const ExtRat& last_alice);

/// tau(beta, a): decode t from beta, b = sigma(t + <a>), answer with the
/// encoding of t + <a> inside (a, min(b, beta)).
BobCodingPtr coding_transform(BobFullPtr sigma);

/// Alice history carried by a coded Bob move; empty for +inf.
std::vector<Rat> decode_alice_history(const ExtRat& bob_move);

}  // namespace baker
