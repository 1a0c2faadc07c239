#pragma once

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "baker/game.hpp"
#include "baker/payoff.hpp"

namespace baker {

/// Outcome of a strategy-blind check; `reason` explains a failure.
struct CheckResult {
  bool ok = true;
  std::string reason;

  static CheckResult pass() { return {}; }
  static CheckResult fail(std::string why) { return {false, std::move(why)}; }
  explicit operator bool() const { return ok; }
};

/// a_n < x < b_n for every logged round.
struct SurvivalCertificate {
  Rat x;
  std::vector<RoundBounds> bounds;
  std::size_t rounds() const { return bounds.size(); }
};

enum class Side : std::uint8_t { Below, Above };

/// w = w_index was made illegal in `round` and stays illegal: w <= a_m
/// (Below) or w >= b_m (Above) for every logged m >= round. `bound` is the
/// move that first excluded it.
struct EliminationCertificate {
  std::size_t index = 0;
  Rat value;
  std::size_t round = 0;
  Side side = Side::Below;
  Rat bound;
  std::string enumeration;
};

/// Nested construction intervals of the Cantor set, one per Alice move, with
/// Alice playing each core's left end, plus a closing core inside the final
/// legal region. The closing core's left end carries a survival certificate.
struct CoreChainCertificate {
  std::vector<CantorCore> cores;
  CantorCore closing;
  SurvivalCertificate survivor;
};

/// Cantor-game verdict at truncation: the limit of Alice's moves lies in
/// [alice, bob].
struct BracketCertificate {
  std::size_t rounds = 0;
  Rat alice;
  Rat bob;
  Rat width() const { return bob - alice; }
};

struct SurvivalStatus {
  /// legal[n] is a_n < x < b_n.
  std::vector<bool> legal;
  std::optional<std::size_t> eliminated_at;
  std::optional<SurvivalCertificate> certificate;
};

SurvivalStatus survival_status(std::span<const Move> moves, const Rat& x);

/// Nullopt while w is still legal at truncation.
std::optional<EliminationCertificate> elimination_certificate(std::span<const Move> moves, const Rat& w,
                                                              std::size_t index, const std::string& enumeration);

/// Certificates for every enumerated w_n with n < min(limit, |W|) that has
/// been eliminated; the second member lists indices still legal.
struct EliminationReport {
  std::vector<EliminationCertificate> certificates;
  std::vector<std::size_t> surviving;
};
EliminationReport eliminate_all(std::span<const Move> moves, const PayoffSet& w, std::size_t limit);

/// Throws NoRefinement if the chain cannot be closed (cannot happen after
/// perfect-Cantor play).
CoreChainCertificate core_chain_certificate(std::span<const Move> moves, std::span<const CantorCore> cores);

BracketCertificate bracket_certificate(std::span<const Move> moves);

CheckResult check(const SurvivalCertificate& c, std::span<const Move> moves);
CheckResult check(const EliminationCertificate& c, std::span<const Move> moves);
CheckResult check(const CoreChainCertificate& c, std::span<const Move> moves);
CheckResult check(const BracketCertificate& c, std::span<const Move> moves);

nlohmann::json to_json(const SurvivalCertificate& c);
nlohmann::json to_json(const EliminationCertificate& c);
nlohmann::json to_json(const CoreChainCertificate& c);
nlohmann::json to_json(const BracketCertificate& c);

using Certificate =
    std::variant<SurvivalCertificate, EliminationCertificate, CoreChainCertificate, BracketCertificate>;

/// Parses one certificate object by its "type" field. Throws ParseError.
Certificate certificate_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Certificate& c);
CheckResult check(const Certificate& c, std::span<const Move> moves);

}  // namespace baker
