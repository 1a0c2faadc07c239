#include "baker/bob.hpp"

#include <random>

#include "baker/sampling.hpp"

namespace baker {

namespace {

std::shared_ptr<const OrderedDomain> or_rationals(std::shared_ptr<const OrderedDomain> d) {
  return d ? std::move(d) : std::make_shared<RationalDomain>();
}

void require_legal_reply(const std::string& who, const Rat& reply, const Rat& a, const ExtRat& beta) {
  if (!(ExtRat(a) < ExtRat(reply) && ExtRat(reply) < beta)) {
    throw GameError(who + " produced illegal reply " + reply.str() + " for region (" + a.str() + ", " + beta.str() +
                    ")");
  }
}

}  // namespace

Rat BobStepper::step(const Rat& alice_move) {
  if (!(ExtRat(alice_move) < last_bob_)) {
    throw IllegalHistory("alice move " + alice_move.str() + " is not below bob's move " + last_bob_.str());
  }
  Rat b = next(alice_move, last_bob_, round_);
  require_legal_reply("folded strategy", b, alice_move, last_bob_);
  last_bob_ = b;
  ++round_;
  return b;
}

Rat FoldedBob::respond(std::span<const Rat> alice_history) const {
  if (alice_history.empty()) throw IllegalHistory("full strategy asked to move before alice");
  auto stepper = start();
  Rat b;
  for (const Rat& a : alice_history) b = stepper->step(a);
  return b;
}

namespace {

class RoundStepper final : public BobStepper {
 public:
  explicit RoundStepper(const BobRoundStrategy& inner) : inner_(inner) {}

 protected:
  Rat next(const Rat& a, const ExtRat& beta, std::size_t n) override { return inner_.respond(beta, a, n); }

 private:
  const BobRoundStrategy& inner_;
};

class LiftedRound final : public FoldedBob {
 public:
  explicit LiftedRound(BobRoundPtr inner) : inner_(std::move(inner)) {}
  std::string name() const override { return inner_->name(); }
  std::unique_ptr<BobStepper> start() const override { return std::make_unique<RoundStepper>(*inner_); }

 private:
  BobRoundPtr inner_;
};

class CodingStepper final : public BobStepper {
 public:
  explicit CodingStepper(const BobCodingStrategy& inner) : inner_(inner) {}

 protected:
  Rat next(const Rat& a, const ExtRat& beta, std::size_t) override { return inner_.respond(beta, a); }

 private:
  const BobCodingStrategy& inner_;
};

class LiftedCoding final : public FoldedBob {
 public:
  explicit LiftedCoding(BobCodingPtr inner) : inner_(std::move(inner)) {}
  std::string name() const override { return inner_->name(); }
  std::unique_ptr<BobStepper> start() const override { return std::make_unique<CodingStepper>(*inner_); }

 private:
  BobCodingPtr inner_;
};

// Wraps an arbitrary full strategy (not necessarily folded) as a stepper by
// keeping the history seen so far.
class HistoryStepper final : public BobStepper {
 public:
  explicit HistoryStepper(const BobFullStrategy& inner) : inner_(inner) {}

 protected:
  Rat next(const Rat& a, const ExtRat&, std::size_t) override {
    history_.push_back(a);
    return inner_.respond(history_);
  }

 private:
  const BobFullStrategy& inner_;
  std::vector<Rat> history_;
};

std::unique_ptr<BobStepper> stepper_for(const BobFullStrategy& s) {
  if (auto folded = dynamic_cast<const FoldedBob*>(&s)) return folded->start();
  return std::make_unique<HistoryStepper>(s);
}

// Steps an inner stepper without its own legality bookkeeping interfering:
// the inner strategy is legal against its own previous moves.
class MinStepper final : public BobStepper {
 public:
  MinStepper(std::unique_ptr<BobStepper> a, std::unique_ptr<BobStepper> b) : a_(std::move(a)), b_(std::move(b)) {}

 protected:
  Rat next(const Rat& a, const ExtRat&, std::size_t) override {
    Rat x = a_->step(a);
    Rat y = b_->step(a);
    return x < y ? x : y;
  }

 private:
  std::unique_ptr<BobStepper> a_, b_;
};

class MinOf final : public FoldedBob {
 public:
  MinOf(BobFullPtr a, BobFullPtr b) : a_(std::move(a)), b_(std::move(b)) {}
  std::string name() const override { return "min(" + a_->name() + "," + b_->name() + ")"; }
  std::unique_ptr<BobStepper> start() const override {
    return std::make_unique<MinStepper>(stepper_for(*a_), stepper_for(*b_));
  }

 private:
  BobFullPtr a_, b_;
};

class RandomStepper final : public BobStepper {
 public:
  RandomStepper(std::uint64_t seed, const OrderedDomain& domain) : rng_(seed), domain_(domain) {}

 protected:
  Rat next(const Rat& a, const ExtRat& beta, std::size_t) override {
    auto r = random_between(rng_, ExtRat(a), beta, domain_);
    if (!r) throw GameError("random bob has no legal element in (" + a.str() + ", " + beta.str() + ")");
    return *r;
  }

 private:
  std::mt19937_64 rng_;
  const OrderedDomain& domain_;
};

class RandomBob final : public FoldedBob {
 public:
  RandomBob(std::uint64_t seed, std::shared_ptr<const OrderedDomain> domain)
      : seed_(seed), domain_(std::move(domain)) {}
  std::string name() const override { return "random(" + std::to_string(seed_) + ")"; }
  std::unique_ptr<BobStepper> start() const override { return std::make_unique<RandomStepper>(seed_, *domain_); }

 private:
  std::uint64_t seed_;
  std::shared_ptr<const OrderedDomain> domain_;
};

class MidpointBob final : public BobCodingStrategy {
 public:
  explicit MidpointBob(std::shared_ptr<const OrderedDomain> d) : domain_(std::move(d)) {}
  std::string name() const override { return "midpoint"; }
  Rat respond(const ExtRat& beta, const Rat& a) const override {
    auto r = domain_->pick_between(ExtRat(a), beta);
    if (!r) throw GameError("midpoint bob has no legal element in (" + a.str() + ", " + beta.str() + ")");
    return *r;
  }

 private:
  std::shared_ptr<const OrderedDomain> domain_;
};

class FractionBob final : public BobCodingStrategy {
 public:
  explicit FractionBob(Rat f) : f_(std::move(f)) {
    if (!(Rat(0) < f_ && f_ < Rat(1))) throw std::invalid_argument("fraction must lie in (0,1)");
  }
  std::string name() const override { return "fraction(" + f_.str() + ")"; }
  Rat respond(const ExtRat& beta, const Rat& a) const override {
    if (!beta.is_finite()) return a + Rat(1);
    return a + f_ * (beta.finite() - a);
  }

 private:
  Rat f_;
};

class EnumerationBob final : public BobRoundStrategy {
 public:
  EnumerationBob(PayoffSet w, std::shared_ptr<const OrderedDomain> d) : w_(std::move(w)), domain_(std::move(d)) {
    if (!w_.can_enumerate()) throw CapabilityMissing("enumeration bob needs an enumerable payoff set");
  }
  std::string name() const override { return "enumeration"; }
  Rat respond(const ExtRat& beta, const Rat& a, std::size_t n) const override {
    return enumeration_move(w_, n, ExtRat(a), beta, *domain_);
  }

 private:
  PayoffSet w_;
  std::shared_ptr<const OrderedDomain> domain_;
};

class EnumerationCodingBob final : public BobCodingStrategy {
 public:
  explicit EnumerationCodingBob(PayoffSet w) : w_(std::move(w)) {
    if (!w_.can_enumerate()) throw CapabilityMissing("enumeration bob needs an enumerable payoff set");
  }
  std::string name() const override { return "enumeration-coding"; }
  Rat respond(const ExtRat& beta, const Rat& a) const override {
    const std::size_t n = decode_round(beta);
    ExtRat hi = beta;
    if (auto w = w_.enumerate(n); w && ExtRat(a) < ExtRat(*w) && ExtRat(*w) < beta) hi = ExtRat(*w);
    if (!hi.is_finite()) hi = ExtRat(a + Rat(1));
    return encode_history(to_bytes(std::to_string(n + 1)), a, hi.finite());
  }

 private:
  PayoffSet w_;
};

}  // namespace

BobFullPtr lift_full(BobRoundPtr inner) { return std::make_shared<LiftedRound>(std::move(inner)); }
BobFullPtr lift_full(BobCodingPtr inner) { return std::make_shared<LiftedCoding>(std::move(inner)); }

BobFullPtr as_full(BobPtr inner) {
  switch (inner->kind()) {
    case BobKind::Full: return std::static_pointer_cast<const BobFullStrategy>(inner);
    case BobKind::RoundIndexed: return lift_full(std::static_pointer_cast<const BobRoundStrategy>(inner));
    case BobKind::Coding: return lift_full(std::static_pointer_cast<const BobCodingStrategy>(inner));
  }
  throw std::logic_error("unknown bob kind");
}

BobFullPtr min_of(BobFullPtr first, BobFullPtr second) {
  return std::make_shared<MinOf>(std::move(first), std::move(second));
}

BobFullPtr random_bob(std::uint64_t seed, std::shared_ptr<const OrderedDomain> domain) {
  return std::make_shared<RandomBob>(seed, or_rationals(std::move(domain)));
}

BobCodingPtr midpoint_bob(std::shared_ptr<const OrderedDomain> domain) {
  return std::make_shared<MidpointBob>(or_rationals(std::move(domain)));
}

BobCodingPtr fraction_bob(const Rat& fraction) { return std::make_shared<FractionBob>(fraction); }

BobRoundPtr enumeration_bob(PayoffSet w, std::shared_ptr<const OrderedDomain> domain) {
  return std::make_shared<EnumerationBob>(std::move(w), or_rationals(std::move(domain)));
}

Rat enumeration_move(const PayoffSet& w, std::size_t round, const ExtRat& last_alice, const ExtRat& last_bob,
                     const OrderedDomain& domain) {
  if (!(last_alice < last_bob)) throw GameError("enumeration move on empty region");
  if (auto wn = w.enumerate(round)) {
    if (last_alice < ExtRat(*wn) && ExtRat(*wn) < last_bob && domain.contains(*wn)) return *wn;
  }
  auto fallback = domain.pick_between(last_alice, last_bob);
  if (!fallback) throw GameError("no legal element for enumeration fallback");
  return *fallback;
}

BobCodingPtr enumeration_coding_bob(PayoffSet w) { return std::make_shared<EnumerationCodingBob>(std::move(w)); }

std::size_t decode_round(const ExtRat& last_bob) {
  if (last_bob.is_pos_inf()) return 0;
  if (!last_bob.is_finite()) throw DecodeFault("cannot decode a round from " + last_bob.str());
  Bytes payload;
  try {
    payload = decode_history(last_bob.finite());
  } catch (const NotEncoded& e) {
    throw DecodeFault(e.what());
  }
  std::string text(payload.begin(), payload.end());
  std::size_t n = 0;
  try {
    std::size_t used = 0;
    n = std::stoul(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
  } catch (const std::exception&) {
    throw DecodeFault("frame '" + text + "' is not a round index");
  }
  return n;
}

// ---------------------------------------------------------------------------

Rat shrink_move(const Rat& inner_move, const Rat& last_alice, const ExtRat& last_bob, std::size_t round) {
  Rat cap = last_alice + Rat(1, static_cast<long>(round + 1));
  if (!(ExtRat(cap) < last_bob)) cap = midpoint(last_alice, last_bob.finite());
  return inner_move < cap ? inner_move : cap;
}

Rat rationalize_move(const Rat& inner_move, const ExtRat& last_alice) {
  if (!(last_alice < ExtRat(inner_move))) throw GameError("rationalize: inner move not above alice's move");
  mpz_class scale = 1;
  for (;;) {
    mpz_class m = (inner_move * Rat(scale)).floor();
    Rat candidate(m, scale);
    if (last_alice < ExtRat(candidate)) return candidate;
    scale <<= 1;
  }
}

namespace {

class ShrinkStepper final : public BobStepper {
 public:
  explicit ShrinkStepper(std::unique_ptr<BobStepper> inner) : inner_(std::move(inner)) {}

 protected:
  Rat next(const Rat& a, const ExtRat& beta, std::size_t n) override {
    return shrink_move(inner_->step(a), a, beta, n);
  }

 private:
  std::unique_ptr<BobStepper> inner_;
};

class ShrinkFull final : public FoldedBob {
 public:
  explicit ShrinkFull(BobFullPtr inner) : inner_(std::move(inner)) {}
  std::string name() const override { return "shrink(" + inner_->name() + ")"; }
  std::unique_ptr<BobStepper> start() const override {
    return std::make_unique<ShrinkStepper>(stepper_for(*inner_));
  }

 private:
  BobFullPtr inner_;
};

class RationalizeStepper final : public BobStepper {
 public:
  explicit RationalizeStepper(std::unique_ptr<BobStepper> inner) : inner_(std::move(inner)) {}

 protected:
  Rat next(const Rat& a, const ExtRat& beta, std::size_t) override {
    Rat inner = inner_->step(a);
    // The inner strategy may sit above our own previous move; stay legal.
    if (!(ExtRat(inner) < beta)) inner = midpoint(a, beta.finite());
    return rationalize_move(inner, ExtRat(a));
  }

 private:
  std::unique_ptr<BobStepper> inner_;
};

class RationalizeFull final : public FoldedBob {
 public:
  explicit RationalizeFull(BobFullPtr inner) : inner_(std::move(inner)) {}
  std::string name() const override { return "rationalize(" + inner_->name() + ")"; }
  std::unique_ptr<BobStepper> start() const override {
    return std::make_unique<RationalizeStepper>(stepper_for(*inner_));
  }

 private:
  BobFullPtr inner_;
};

Rat inner_round_reply(const BobStrategy& inner, const ExtRat& beta, const Rat& a, std::size_t n) {
  return static_cast<const BobRoundStrategy&>(inner).respond(beta, a, n);
}

class ShrinkRound final : public BobRoundStrategy {
 public:
  explicit ShrinkRound(BobPtr inner) : inner_(std::move(inner)) {}
  std::string name() const override { return "shrink(" + inner_->name() + ")"; }
  Rat respond(const ExtRat& beta, const Rat& a, std::size_t n) const override {
    return shrink_move(inner_round_reply(*inner_, beta, a, n), a, beta, n);
  }

 private:
  BobPtr inner_;
};

class RationalizeRound final : public BobRoundStrategy {
 public:
  explicit RationalizeRound(BobPtr inner) : inner_(std::move(inner)) {}
  std::string name() const override { return "rationalize(" + inner_->name() + ")"; }
  Rat respond(const ExtRat& beta, const Rat& a, std::size_t n) const override {
    return rationalize_move(inner_round_reply(*inner_, beta, a, n), ExtRat(a));
  }

 private:
  BobPtr inner_;
};

class CodedBob final : public BobCodingStrategy {
 public:
  explicit CodedBob(BobFullPtr sigma) : sigma_(std::move(sigma)) {}
  std::string name() const override { return "coded(" + sigma_->name() + ")"; }
  Rat respond(const ExtRat& beta, const Rat& a) const override {
    std::vector<Rat> t = decode_alice_history(beta);
    t.push_back(a);
    const Rat b = sigma_->respond(t);
    // sigma's reply answers its own previous move, which lies above beta;
    // the cap at beta is what keeps tau legal.
    const ExtRat hi = min(ExtRat(b), beta);
    if (!(ExtRat(a) < hi)) throw GameError("coded bob: empty region below " + hi.str());
    return encode_history(serialize_history(t), a, hi.finite());
  }

 private:
  BobFullPtr sigma_;
};

}  // namespace

BobFullPtr shrink_wrap_full(BobFullPtr inner) { return std::make_shared<ShrinkFull>(std::move(inner)); }

BobPtr shrink_wrap(BobPtr inner) {
  // A coding inner must keep seeing its own unwrapped moves, so it is folded
  // over the history instead.
  if (inner->kind() != BobKind::RoundIndexed) return shrink_wrap_full(as_full(std::move(inner)));
  return std::make_shared<ShrinkRound>(std::move(inner));
}

BobFullPtr rationalize_wrap_full(BobFullPtr inner) { return std::make_shared<RationalizeFull>(std::move(inner)); }

BobPtr rationalize_wrap(BobPtr inner) {
  // A coding inner must keep seeing its own unwrapped moves, so it is folded
  // over the history instead.
  if (inner->kind() != BobKind::RoundIndexed) return rationalize_wrap_full(as_full(std::move(inner)));
  return std::make_shared<RationalizeRound>(std::move(inner));
}

BobCodingPtr coding_transform(BobFullPtr sigma) { return std::make_shared<CodedBob>(std::move(sigma)); }

std::vector<Rat> decode_alice_history(const ExtRat& bob_move) {
  if (bob_move.is_pos_inf()) return {};
  if (!bob_move.is_finite()) throw DecodeFault("cannot decode " + bob_move.str());
  try {
    return deserialize_history(decode_history(bob_move.finite()));
  } catch (const NotEncoded& e) {
    throw DecodeFault(std::string("previous bob move carries no history: ") + e.what());
  }
}

}  // namespace baker
