#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "baker/alice.hpp"
#include "baker/bob.hpp"
#include "baker/game.hpp"
#include "baker/payoff.hpp"

namespace baker {

/// Any problem with a configuration: unknown names, missing fields,
/// capability mismatches.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses a payoff descriptor:
///   {"kind": "finite", "values": [...]} | {"kind": "rationals", "lo", "hi"} |
///   {"kind": "cantor"} | {"kind": "union", "parts": [...]} |
///   {"kind": "complementInInterval", "of": {...}, "lo", "hi"}
PayoffSet payoff_from_json(const nlohmann::json& j);

/// Bob descriptor: a name or {"bob": name, "wrap": [...], ...}. Names:
/// enumeration, enumeration-coding, midpoint, random (seed), fraction
/// (fraction), coded(<inner name>). Wraps: shrink, rationalize.
BobPtr bob_from_json(const nlohmann::json& j, const PayoffSet& payoff,
                     std::shared_ptr<const OrderedDomain> domain);

/// True when every w_n is made illegal in round n by this Bob.
bool bob_eliminates_enumeration(const nlohmann::json& j);

using AliceFactory = std::function<std::unique_ptr<AliceStrategy>()>;

/// Alice descriptor: a name or {"alice": name, ...}. Names: target (x,
/// budget), perfect-cantor, midpoint-up, random (seed, bias).
AliceFactory alice_from_json(const nlohmann::json& j, const PayoffSet& payoff, BobPtr bob,
                             std::shared_ptr<const OrderedDomain> domain);

struct RunConfig {
  GameKind game = GameKind::Baker;
  std::string domain = "rationals";
  nlohmann::json payoff;
  nlohmann::json alice;
  nlohmann::json bob;
  std::size_t rounds = 10;
  std::uint64_t seed = 0;
  std::string out = ".";
};

RunConfig run_config_from_json(const nlohmann::json& j);
nlohmann::json to_json(const RunConfig& c);

/// A config with every descriptor resolved.
struct RunSetup {
  RunConfig config;
  std::shared_ptr<const OrderedDomain> domain;
  std::optional<PayoffSet> payoff;
  BobPtr bob;
  AliceFactory alice;
};

/// Throws ConfigError.
RunSetup resolve(const RunConfig& c);

/// Names accepted in descriptors, for discovery.
nlohmann::json strategy_roster();

}  // namespace baker
