#include "baker/alice.hpp"

namespace baker {

NotFound::NotFound(std::size_t b)
    : GameError("no witness within " + std::to_string(b) + " probes"), budget(b) {}

ReplyProbe reply_probe(const BobCodingStrategy& sigma, const ExtRat& beta) {
  return [&sigma, beta](const Rat& a) { return sigma.respond(beta, a); };
}

ReplyProbe reply_probe(const BobStrategy& bob, const Position& pos) {
  const ExtRat beta = pos.last_bob();
  switch (bob.kind()) {
    case BobKind::Coding:
      return reply_probe(static_cast<const BobCodingStrategy&>(bob), beta);
    case BobKind::RoundIndexed: {
      const auto& s = static_cast<const BobRoundStrategy&>(bob);
      const std::size_t n = pos.round();
      return [&s, beta, n](const Rat& a) { return s.respond(beta, a, n); };
    }
    case BobKind::Full: {
      const auto& s = static_cast<const BobFullStrategy&>(bob);
      std::vector<Rat> t(pos.alice().begin(), pos.alice().end());
      return [&s, t = std::move(t)](const Rat& a) mutable {
        t.push_back(a);
        Rat b = s.respond(t);
        t.pop_back();
        return b;
      };
    }
  }
  throw std::logic_error("unknown bob kind");
}

Rat witness_probe(const Rat& q, const Rat& x, std::size_t k) {
  return x - (x - q) * pow2_inverse(static_cast<unsigned>(k));
}

EProbeResult e_probe(const ReplyProbe& reply, const Rat& q, const Rat& x, std::size_t budget) {
  if (!(q < x)) throw TargetIllegal("probe floor " + q.str() + " is not below target " + x.str());
  EProbeResult out;
  for (std::size_t k = 1; k <= budget; ++k) {
    Rat a = witness_probe(q, x, k);
    ++out.probes_used;
    if (x < reply(a)) {
      out.witness = std::move(a);
      break;
    }
  }
  return out;
}

EProbeResult e_probe(const BobCodingStrategy& sigma, const Rat& q, const ExtRat& beta, const Rat& x,
                     std::size_t budget) {
  return e_probe(reply_probe(sigma, beta), q, x, budget);
}

Rat witness_search(const ReplyProbe& reply, const WitnessQuery& wq) {
  auto r = e_probe(reply, wq.q, wq.x, wq.budget);
  if (!r.witness) throw NotFound(wq.budget);
  return *r.witness;
}

Rat witness_search(const BobCodingStrategy& sigma, const WitnessQuery& wq) {
  return witness_search(reply_probe(sigma, wq.beta), wq);
}

Rat target_floor(const ExtRat& alpha, const Rat& x) { return rational_witness(alpha, ExtRat(x)); }

Rat target_move(const BobCodingStrategy& sigma, const ExtRat& alpha, const ExtRat& beta, const Rat& x,
                std::size_t budget) {
  if (!(alpha < ExtRat(x) && ExtRat(x) < beta))
    throw TargetIllegal("target " + x.str() + " is outside (" + alpha.str() + ", " + beta.str() + ")");
  return witness_search(sigma, WitnessQuery{target_floor(alpha, x), beta, x, budget});
}

Rat full_info_target_move(const BobFullStrategy& sigma, std::span<const Rat> history, const Rat& x,
                          std::size_t budget) {
  const ExtRat alpha = history.empty() ? ExtRat::neg_inf() : ExtRat(history.back());
  const ExtRat beta = history.empty() ? ExtRat::pos_inf() : ExtRat(sigma.respond(history));
  if (!(alpha < ExtRat(x) && ExtRat(x) < beta))
    throw TargetIllegal("target " + x.str() + " is outside (" + alpha.str() + ", " + beta.str() + ")");
  std::vector<Rat> t(history.begin(), history.end());
  ReplyProbe reply = [&](const Rat& a) {
    t.push_back(a);
    Rat b = sigma.respond(t);
    t.pop_back();
    return b;
  };
  return witness_search(reply, WitnessQuery{target_floor(alpha, x), beta, x, budget});
}

PerfectMove perfect_move(const PerfectTrackerState& state, const ExtRat& alpha, const ExtRat& beta) {
  CantorCore next = cantor_refine(state.core, Interval{alpha, beta});
  PerfectMove out{next.left, PerfectTrackerState{next, state.rounds + 1}};
  return out;
}

// ---------------------------------------------------------------------------

Rat MidpointUpAlice::move(const Position& pos) {
  if (pos.alice().empty() && pos.domain().contains(Rat(0))) return Rat(0);
  auto r = pos.domain().pick_between(pos.legal_interval());
  if (!r) throw GameError("midpoint-up alice has no legal move");
  return *r;
}

std::string RandomAlice::name() const {
  std::string b = bias_ == Bias::High ? ",high" : (bias_ == Bias::Low ? ",low" : "");
  return "random(" + std::to_string(seed_) + b + ")";
}

void RandomAlice::begin(std::uint64_t seed) { rng_.seed(mix_seed(seed_, seed)); }

Rat RandomAlice::move(const Position& pos) {
  auto r = random_between(rng_, pos.last_alice(), pos.last_bob(), pos.domain(), bias_);
  if (!r) throw GameError("random alice has no legal move");
  return *r;
}

TargetAlice::TargetAlice(std::shared_ptr<const BobStrategy> bob, Rat x, std::size_t budget)
    : bob_(std::move(bob)), x_(std::move(x)), budget_(budget) {}

std::string TargetAlice::name() const { return "target(" + x_.str() + ")"; }

Rat TargetAlice::move(const Position& pos) {
  const ExtRat alpha = pos.last_alice();
  if (!pos.legal_interval().contains(x_)) {
    ++misses_;
    auto r = pos.domain().pick_between(pos.legal_interval());
    if (!r) throw GameError("target alice has no legal move");
    return *r;
  }
  const Rat q = target_floor(alpha, x_);
  auto res = e_probe(reply_probe(*bob_, pos), q, x_, budget_);
  if (res.witness) return *res.witness;
  ++misses_;
  return witness_probe(q, x_, std::max<std::size_t>(budget_, 1));
}

void PerfectCantorAlice::begin(std::uint64_t) {
  state_ = PerfectTrackerState{};
  chain_.clear();
}

Rat PerfectCantorAlice::move(const Position& pos) {
  auto pm = perfect_move(state_, pos.last_alice(), pos.last_bob());
  state_ = pm.state;
  chain_.push_back(state_.core);
  return pm.value;
}

}  // namespace baker
