#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "baker/bob.hpp"
#include "baker/game.hpp"
#include "baker/payoff.hpp"
#include "baker/sampling.hpp"

namespace baker {

class TargetIllegal : public GameError {
 public:
  using GameError::GameError;
};

class NotFound : public GameError {
 public:
  explicit NotFound(std::size_t budget);
  std::size_t budget;
};

/// Bob's one-round reply to a hypothetical Alice move a, everything else
/// about the position held fixed.
using ReplyProbe = std::function<Rat(const Rat& a)>;

/// Reply probe for any kind of Bob at the position where Alice is to move.
ReplyProbe reply_probe(const BobStrategy& bob, const Position& pos);
ReplyProbe reply_probe(const BobCodingStrategy& sigma, const ExtRat& beta);

struct WitnessQuery {
  Rat q;
  ExtRat beta = ExtRat::pos_inf();
  Rat x;
  std::size_t budget = 64;
};

/// k-th probe x - (x - q) / 2^k, k >= 1.
Rat witness_probe(const Rat& q, const Rat& x, std::size_t k);

/// First probe a with x < reply(a). Throws NotFound after `budget` probes.
Rat witness_search(const ReplyProbe& reply, const WitnessQuery& wq);
Rat witness_search(const BobCodingStrategy& sigma, const WitnessQuery& wq);

/// q for the target tracker: rational_witness(alpha, x); with alpha = -inf it
/// is the greatest integer below x.
Rat target_floor(const ExtRat& alpha, const Rat& x);

/// Throws TargetIllegal unless alpha < x < beta; NotFound propagates.
Rat target_move(const BobCodingStrategy& sigma, const ExtRat& alpha, const ExtRat& beta, const Rat& x,
                std::size_t budget = 64);

struct EProbeResult {
  /// Set iff x escapes; then q < witness < x < reply(witness).
  std::optional<Rat> witness;
  std::size_t probes_used = 0;

  bool escapes() const { return witness.has_value(); }
};

EProbeResult e_probe(const ReplyProbe& reply, const Rat& q, const Rat& x, std::size_t budget = 64);
EProbeResult e_probe(const BobCodingStrategy& sigma, const Rat& q, const ExtRat& beta, const Rat& x,
                     std::size_t budget = 64);

/// Witness against a full-information sigma, probing sigma(t + <a>).
Rat full_info_target_move(const BobFullStrategy& sigma, std::span<const Rat> history, const Rat& x,
                          std::size_t budget = 64);

// ---------------------------------------------------------------------------
// Perfect-set strategy on the middle-thirds Cantor set.

struct PerfectTrackerState {
  CantorCore core{0, Rat(0)};
  std::size_t rounds = 0;
};

struct PerfectMove {
  Rat value;
  PerfectTrackerState state;
};

/// Refines the core into (alpha, beta) and plays its left endpoint.
PerfectMove perfect_move(const PerfectTrackerState& state, const ExtRat& alpha, const ExtRat& beta);

// ---------------------------------------------------------------------------
// Strategy handles.

/// 0 first, then the midpoint of the legal region (last Alice + 1 while Bob's
/// side is unbounded). On non-dense domains uses pick_between.
class MidpointUpAlice final : public AliceStrategy {
 public:
  std::string name() const override { return "midpoint-up"; }
  Rat move(const Position& pos) override;
};

class RandomAlice final : public AliceStrategy {
 public:
  explicit RandomAlice(std::uint64_t seed, Bias bias = Bias::Uniform) : seed_(seed), bias_(bias) {}
  std::string name() const override;
  void begin(std::uint64_t seed) override;
  Rat move(const Position& pos) override;

 private:
  std::uint64_t seed_;
  Bias bias_;
  std::mt19937_64 rng_;
};

/// Keeps x legal against a known Bob by playing witnesses. When no witness
/// turns up within budget it plays the last probe and counts a miss.
class TargetAlice final : public AliceStrategy {
 public:
  TargetAlice(std::shared_ptr<const BobStrategy> bob, Rat x, std::size_t budget = 64);
  std::string name() const override;
  void begin(std::uint64_t) override { misses_ = 0; }
  Rat move(const Position& pos) override;

  const Rat& target() const { return x_; }
  std::size_t misses() const { return misses_; }

 private:
  std::shared_ptr<const BobStrategy> bob_;
  Rat x_;
  std::size_t budget_;
  std::size_t misses_ = 0;
};

class PerfectCantorAlice final : public AliceStrategy {
 public:
  std::string name() const override { return "perfect-cantor"; }
  void begin(std::uint64_t) override;
  Rat move(const Position& pos) override;

  /// Cores played so far, one per Alice move.
  const std::vector<CantorCore>& chain() const { return chain_; }

 private:
  PerfectTrackerState state_;
  std::vector<CantorCore> chain_;
};

}  // namespace baker
