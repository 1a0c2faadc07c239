#pragma once

#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "baker/bob.hpp"
#include "baker/certificate.hpp"
#include "baker/game.hpp"
#include "baker/payoff.hpp"

namespace baker {

/// Open interval with rational endpoints, lo < hi.
struct BmInterval {
  Rat lo;
  Rat hi;
  Rat width() const { return hi - lo; }
  /// closure(inner) is inside this open interval.
  bool holds_closure_of(const BmInterval& inner) const { return lo < inner.lo && inner.hi < hi; }
  std::string str() const { return "(" + lo.str() + ", " + hi.str() + ")"; }
  friend bool operator==(const BmInterval&, const BmInterval&) = default;
};

class IllegalInterval : public GameError {
 public:
  IllegalInterval(Player player, std::size_t round, const std::string& detail);
  Player player;
  std::size_t round;
};

struct BmMove {
  std::size_t round = 0;
  Player player = Player::Bob;
  BmInterval interval;
  friend bool operator==(const BmMove&, const BmMove&) = default;
};

/// Bob moves first in every round.
struct BmTranscript {
  BmInterval start;
  std::size_t rounds_requested = 0;
  std::vector<BmMove> moves;

  const BmInterval& current() const { return moves.empty() ? start : moves.back().interval; }
};

class BmStrategy {
 public:
  virtual ~BmStrategy() = default;
  virtual std::string name() const = 0;
  /// `round` counts completed rounds; `current` is the interval to shrink.
  virtual BmInterval move(std::size_t round, const BmInterval& current) const = 0;
};

using BmStrategyPtr = std::shared_ptr<const BmStrategy>;

/// Middle half: (lo + w/4, hi - w/4); its closure sits inside the input.
BmInterval shrink_to_closure(const BmInterval& i);

BmTranscript bm_play_truncated(const BmStrategy& alice, const BmStrategy& bob, std::size_t rounds,
                               const BmInterval& start);

/// Re-checks closure containment along the move log. Throws IllegalInterval.
void bm_replay(const BmTranscript& tr);

/// Countable cover F_0, F_1, ... by nowhere dense sets.
struct MeagerPresentation {
  CoverFn cover;
  NowhereDensePtr piece(std::size_t n) const { return cover ? cover(n) : nullptr; }
};

MeagerPresentation cantor_presentation();
MeagerPresentation presentation_of(const PayoffSet& w);

/// shrink_to_closure(avoid(F_n, I)), or shrink_to_closure(I) past the cover.
BmInterval meager_bob_move(const MeagerPresentation& pres, std::size_t n, const BmInterval& i);
/// Same dodge against the complement's cover.
BmInterval comeager_alice_move(const MeagerPresentation& complement, std::size_t n, const BmInterval& i);

/// Left half, then shrink_to_closure.
BmStrategyPtr halves_left_bm();
BmStrategyPtr meager_bob_bm(MeagerPresentation pres);
BmStrategyPtr comeager_alice_bm(MeagerPresentation complement);

/// Nested intervals whose last one misses the Cantor set.
struct BmDisjointCertificate {
  std::vector<BmInterval> intervals;
};

BmDisjointCertificate bm_disjoint_certificate(const BmTranscript& tr);
CheckResult check(const BmDisjointCertificate& c, const BmTranscript& tr);

nlohmann::json to_json(const BmDisjointCertificate& c);
BmDisjointCertificate bm_certificate_from_json(const nlohmann::json& j);

struct BakerRun {
  std::string bob;
  Transcript transcript;
  CoreChainCertificate certificate;
  CheckResult check;
};

struct CantorComparison {
  std::size_t rounds = 0;
  BmTranscript bm;
  BmDisjointCertificate bm_certificate;
  CheckResult bm_check;
  std::vector<BakerRun> baker;

  /// Both sides of the divergence hold at once.
  bool valid() const;
};

/// Default roster: midpoint, enumeration of the rationals in [0,1], random(7).
std::vector<BobPtr> default_cantor_roster();

/// Throws std::invalid_argument for rounds == 0.
CantorComparison compare_on_cantor(std::size_t rounds, const std::vector<BobPtr>& roster = default_cantor_roster());

nlohmann::json to_json(const CantorComparison& c);

}  // namespace baker
