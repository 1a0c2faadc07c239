#include "baker/run.hpp"

#include <algorithm>

namespace baker {

RunOutput execute(const RunSetup& setup) {
  const RunConfig& c = setup.config;
  auto alice = setup.alice();
  RunOutput out;
  out.alice_name = alice->name();
  out.bob_name = setup.bob->name();
  out.transcript = play_truncated(*alice, *setup.bob, c.rounds, setup.domain, c.seed, c.game);
  const auto& moves = out.transcript.moves;
  const std::size_t completed = out.transcript.completed_rounds();
  auto& bundle = out.certificates;

  bundle.meta["verdict"] =
      out.transcript.verdict == Verdict::AliceLosesImmediately ? "aliceLosesImmediately" : "truncated";
  if (out.transcript.stuck_player) bundle.meta["stuck"] = std::string(1, player_code(*out.transcript.stuck_player));
  bundle.meta["completedRounds"] = completed;
  if (!c.payoff.is_null()) bundle.meta["payoff"] = c.payoff;

  if (setup.payoff && setup.payoff->can_enumerate()) {
    std::size_t limit = completed;
    if (auto n = setup.payoff->finite_size()) limit = std::min(limit, *n);
    auto rep = eliminate_all(moves, *setup.payoff, limit);
    for (auto& e : rep.certificates) bundle.baker.emplace_back(std::move(e));
    if (bob_eliminates_enumeration(c.bob)) bundle.claimed_eliminations = limit;
    nlohmann::json alive = nlohmann::json::array();
    for (auto n : rep.surviving) alive.push_back(n);
    bundle.meta["enumeration"] = setup.payoff->enumeration_name();
    bundle.meta["stillLegal"] = alive;
  }

  if (completed > 0) {
    if (auto* t = dynamic_cast<const TargetAlice*>(alice.get())) {
      auto st = survival_status(moves, t->target());
      if (st.certificate) bundle.baker.emplace_back(std::move(*st.certificate));
      bundle.meta["target"] = t->target().str();
      bundle.meta["targetSurvived"] = st.certificate.has_value();
      if (st.eliminated_at) bundle.meta["targetEliminatedAt"] = *st.eliminated_at;
    }
    if (auto* p = dynamic_cast<const PerfectCantorAlice*>(alice.get())) {
      bundle.baker.emplace_back(core_chain_certificate(moves, p->chain()));
    }
    if (c.game == GameKind::Cantor) bundle.baker.emplace_back(bracket_certificate(moves));
  }
  return out;
}

}  // namespace baker
