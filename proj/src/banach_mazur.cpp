#include "baker/banach_mazur.hpp"

#include "baker/alice.hpp"
#include "baker/io.hpp"

namespace baker {

using nlohmann::json;

IllegalInterval::IllegalInterval(Player p, std::size_t r, const std::string& detail)
    : GameError(std::string(1, player_code(p)) + " round " + std::to_string(r) + ": " + detail), player(p), round(r) {}

BmInterval shrink_to_closure(const BmInterval& i) {
  const Rat quarter = i.width() * Rat(1, 4);
  return {i.lo + quarter, i.hi - quarter};
}

BmTranscript bm_play_truncated(const BmStrategy& alice, const BmStrategy& bob, std::size_t rounds,
                               const BmInterval& start) {
  if (!(start.lo < start.hi)) throw std::invalid_argument("empty start interval " + start.str());
  BmTranscript tr{start, rounds, {}};
  for (std::size_t n = 0; n < rounds; ++n) {
    for (Player p : {Player::Bob, Player::Alice}) {
      const BmInterval& cur = tr.current();
      BmInterval next = (p == Player::Bob ? bob : alice).move(n, cur);
      if (!(next.lo < next.hi) || !cur.holds_closure_of(next))
        throw IllegalInterval(p, n, next.str() + " is not closure-inside " + cur.str());
      tr.moves.push_back({n, p, next});
    }
  }
  return tr;
}

void bm_replay(const BmTranscript& tr) {
  BmInterval cur = tr.start;
  Player expected = Player::Bob;
  std::size_t round = 0;
  for (const BmMove& m : tr.moves) {
    if (m.player != expected || m.round != round)
      throw IllegalInterval(m.player, m.round, "out of turn");
    if (!(m.interval.lo < m.interval.hi) || !cur.holds_closure_of(m.interval))
      throw IllegalInterval(m.player, m.round, m.interval.str() + " is not closure-inside " + cur.str());
    cur = m.interval;
    if (expected == Player::Alice) ++round;
    expected = expected == Player::Bob ? Player::Alice : Player::Bob;
  }
}

MeagerPresentation cantor_presentation() {
  auto c = std::make_shared<CantorSet>();
  return {[c](std::size_t n) -> NowhereDensePtr { return n == 0 ? c : nullptr; }};
}

MeagerPresentation presentation_of(const PayoffSet& w) { return {w.cover()}; }

namespace {

BmInterval dodge(const MeagerPresentation& pres, std::size_t n, const BmInterval& i) {
  BmInterval target = i;
  if (auto f = pres.piece(n)) {
    Interval j = f->avoid(Interval{ExtRat(i.lo), ExtRat(i.hi)});
    if (j.empty() || !j.lo.is_finite() || !j.hi.is_finite() || j.lo < ExtRat(i.lo) || ExtRat(i.hi) < j.hi)
      throw OracleFault(f->name() + " returned " + j.str() + " for " + i.str());
    target = {j.lo.finite(), j.hi.finite()};
  }
  return shrink_to_closure(target);
}

class HalvesLeft final : public BmStrategy {
 public:
  std::string name() const override { return "halves-left"; }
  BmInterval move(std::size_t, const BmInterval& cur) const override {
    return shrink_to_closure({cur.lo, midpoint(cur.lo, cur.hi)});
  }
};

class MeagerBob final : public BmStrategy {
 public:
  explicit MeagerBob(MeagerPresentation p) : pres_(std::move(p)) {}
  std::string name() const override { return "meager"; }
  BmInterval move(std::size_t n, const BmInterval& cur) const override { return meager_bob_move(pres_, n, cur); }

 private:
  MeagerPresentation pres_;
};

class ComeagerAlice final : public BmStrategy {
 public:
  explicit ComeagerAlice(MeagerPresentation p) : pres_(std::move(p)) {}
  std::string name() const override { return "comeager"; }
  BmInterval move(std::size_t n, const BmInterval& cur) const override {
    return comeager_alice_move(pres_, n, cur);
  }

 private:
  MeagerPresentation pres_;
};

}  // namespace

BmInterval meager_bob_move(const MeagerPresentation& pres, std::size_t n, const BmInterval& i) {
  return dodge(pres, n, i);
}

BmInterval comeager_alice_move(const MeagerPresentation& complement, std::size_t n, const BmInterval& i) {
  return dodge(complement, n, i);
}

BmStrategyPtr halves_left_bm() { return std::make_shared<HalvesLeft>(); }
BmStrategyPtr meager_bob_bm(MeagerPresentation pres) { return std::make_shared<MeagerBob>(std::move(pres)); }
BmStrategyPtr comeager_alice_bm(MeagerPresentation complement) {
  return std::make_shared<ComeagerAlice>(std::move(complement));
}

// ---------------------------------------------------------------------------

BmDisjointCertificate bm_disjoint_certificate(const BmTranscript& tr) {
  BmDisjointCertificate c;
  for (const auto& m : tr.moves) c.intervals.push_back(m.interval);
  return c;
}

CheckResult check(const BmDisjointCertificate& c, const BmTranscript& tr) {
  try {
    bm_replay(tr);
  } catch (const IllegalInterval& e) {
    return CheckResult::fail(e.what());
  }
  if (c.intervals.size() != tr.moves.size()) return CheckResult::fail("certificate and log differ in length");
  if (c.intervals.empty()) return CheckResult::fail("no moves");
  for (std::size_t i = 0; i < c.intervals.size(); ++i)
    if (!(c.intervals[i] == tr.moves[i].interval))
      return CheckResult::fail("interval " + std::to_string(i) + " differs from the log");
  const BmInterval& last = c.intervals.back();
  if (cantor_meets(Interval{ExtRat(last.lo), ExtRat(last.hi)}))
    return CheckResult::fail("final interval " + last.str() + " meets the Cantor set");
  return CheckResult::pass();
}

json to_json(const BmDisjointCertificate& c) {
  json arr = json::array();
  for (const auto& i : c.intervals) arr.push_back(json::array({i.lo.str(), i.hi.str()}));
  return json{{"type", "bmDisjoint"}, {"set", "cantor"}, {"intervals", arr}};
}

BmDisjointCertificate bm_certificate_from_json(const json& j) {
  if (!j.is_object() || j.value("type", "") != "bmDisjoint") throw ParseError("expected a bmDisjoint certificate");
  if (!j.contains("intervals") || !j["intervals"].is_array()) throw ParseError("bmDisjoint needs 'intervals'");
  BmDisjointCertificate c;
  for (const auto& pair : j["intervals"]) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string())
      throw ParseError("interval must be [\"lo\", \"hi\"]");
    c.intervals.push_back({Rat::parse(pair[0].get<std::string>()), Rat::parse(pair[1].get<std::string>())});
  }
  return c;
}

// ---------------------------------------------------------------------------

bool CantorComparison::valid() const {
  if (!bm_check) return false;
  for (const auto& r : baker)
    if (!r.check) return false;
  return !baker.empty();
}

std::vector<BobPtr> default_cantor_roster() {
  return {midpoint_bob(), enumeration_bob(rationals_payoff(Rat(0), Rat(1))), random_bob(7)};
}

CantorComparison compare_on_cantor(std::size_t rounds, const std::vector<BobPtr>& roster) {
  if (rounds == 0) throw std::invalid_argument("compare_on_cantor needs at least one round");
  CantorComparison out;
  out.rounds = rounds;
  out.bm = bm_play_truncated(*halves_left_bm(), *meager_bob_bm(cantor_presentation()), rounds, {Rat(0), Rat(1)});
  out.bm_certificate = bm_disjoint_certificate(out.bm);
  out.bm_check = check(out.bm_certificate, out.bm);

  auto rationals = std::make_shared<RationalDomain>();
  for (const auto& bob : roster) {
    PerfectCantorAlice alice;
    Transcript tr = play_truncated(alice, *bob, rounds, rationals, 0);
    CoreChainCertificate cert = core_chain_certificate(tr.moves, alice.chain());
    CheckResult ok = check(cert, tr.moves);
    out.baker.push_back({bob->name(), std::move(tr), std::move(cert), std::move(ok)});
  }
  return out;
}

json to_json(const CantorComparison& c) {
  json bm_moves = json::array();
  for (const auto& m : c.bm.moves) bm_moves.push_back(bm_move_json(m));
  json baker = json::array();
  for (const auto& r : c.baker) {
    json moves = json::array();
    for (const auto& m : r.transcript.moves) moves.push_back(move_json(m));
    baker.push_back(json{{"bob", r.bob},
                         {"moves", moves},
                         {"certificate", to_json(r.certificate)},
                         {"valid", r.check.ok},
                         {"reason", r.check.reason}});
  }
  return json{{"N", c.rounds},
              {"banachMazur",
               {{"moves", bm_moves},
                {"certificate", to_json(c.bm_certificate)},
                {"valid", c.bm_check.ok},
                {"reason", c.bm_check.reason}}},
              {"baker", baker},
              {"valid", c.valid()}};
}

}  // namespace baker
