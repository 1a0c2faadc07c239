#include "baker/config.hpp"

namespace baker {

using nlohmann::json;

namespace {

// Non-negative integer, whether stored signed or unsigned.
bool is_count(const nlohmann::json& j) {
  return j.is_number_unsigned() || (j.is_number_integer() && j.get<std::int64_t>() >= 0);
}

Rat rat_of(const json& j, const std::string& what) {
  try {
    if (j.is_string()) return Rat::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rat(j.get<long>());
  } catch (const ParseError& e) {
    throw ConfigError(what + ": " + e.what());
  }
  throw ConfigError(what + " must be a rational text such as \"1/3\"");
}

const json& need(const json& j, const char* key, const std::string& what) {
  if (!j.is_object() || !j.contains(key)) throw ConfigError(what + " is missing '" + key + "'");
  return j.at(key);
}

std::string name_of(const json& j, const char* key, const std::string& what) {
  if (j.is_string()) return j.get<std::string>();
  const json& n = need(j, key, what);
  if (!n.is_string()) throw ConfigError(what + " '" + key + "' must be text");
  return n.get<std::string>();
}

std::uint64_t seed_of(const json& j, std::uint64_t fallback) {
  if (!j.is_object() || !j.contains("seed")) return fallback;
  if (!is_count(j["seed"])) throw ConfigError("seed must be a non-negative integer");
  return j["seed"].get<std::uint64_t>();
}

BobPtr base_bob(const std::string& name, const json& j, const PayoffSet* payoff,
                std::shared_ptr<const OrderedDomain> domain) {
  auto need_enum = [&]() -> const PayoffSet& {
    if (!payoff) throw ConfigError("bob '" + name + "' needs a payoff set");
    if (!payoff->can_enumerate()) throw ConfigError("bob '" + name + "' needs an enumerable payoff set");
    return *payoff;
  };
  if (name == "enumeration") return enumeration_bob(need_enum(), domain);
  if (name == "enumeration-coding") {
    if (!domain->dense()) throw ConfigError("enumeration-coding bob needs a dense domain");
    return enumeration_coding_bob(need_enum());
  }
  if (name == "midpoint") return midpoint_bob(domain);
  if (name == "random") return random_bob(seed_of(j, 0), domain);
  if (name == "fraction") {
    Rat f = rat_of(need(j, "fraction", "fraction bob"), "fraction");
    if (!(Rat(0) < f && f < Rat(1))) throw ConfigError("fraction must lie in (0,1)");
    return fraction_bob(f);
  }
  if (name.starts_with("coded(") && name.ends_with(")")) {
    if (domain->canonical_name() != "rationals") throw ConfigError("coded bob needs the rationals domain");
    std::string inner = name.substr(6, name.size() - 7);
    return coding_transform(as_full(base_bob(inner, j, payoff, domain)));
  }
  throw ConfigError("unknown bob '" + name + "'");
}

std::vector<std::string> wraps_of(const json& j) {
  std::vector<std::string> out;
  if (!j.is_object() || !j.contains("wrap")) return out;
  const json& w = j["wrap"];
  if (w.is_string()) return {w.get<std::string>()};
  if (!w.is_array()) throw ConfigError("wrap must be a list");
  for (const auto& x : w) {
    if (!x.is_string()) throw ConfigError("wrap entries must be text");
    out.push_back(x.get<std::string>());
  }
  return out;
}

}  // namespace

PayoffSet payoff_from_json(const json& j) {
  const std::string kind = name_of(j, "kind", "payoff");
  if (kind == "finite") {
    const json& vals = need(j, "values", "finite payoff");
    if (!vals.is_array()) throw ConfigError("finite payoff 'values' must be a list");
    std::vector<Rat> v;
    for (const auto& x : vals) v.push_back(rat_of(x, "finite payoff value"));
    for (std::size_t a = 0; a < v.size(); ++a)
      for (std::size_t b = a + 1; b < v.size(); ++b)
        if (v[a] == v[b]) throw ConfigError("finite payoff repeats " + v[a].str());
    return finite_payoff(std::move(v));
  }
  if (kind == "rationals") {
    Rat lo = rat_of(need(j, "lo", "rationals payoff"), "lo");
    Rat hi = rat_of(need(j, "hi", "rationals payoff"), "hi");
    if (!(lo < hi)) throw ConfigError("rationals payoff needs lo < hi");
    return rationals_payoff(lo, hi);
  }
  if (kind == "cantor") return cantor_payoff();
  if (kind == "union") {
    const json& parts = need(j, "parts", "union payoff");
    if (!parts.is_array() || parts.empty()) throw ConfigError("union payoff needs a nonempty 'parts' list");
    std::vector<PayoffSet> ps;
    for (const auto& p : parts) ps.push_back(payoff_from_json(p));
    return union_payoff(std::move(ps));
  }
  if (kind == "complementInInterval") {
    Rat lo = rat_of(need(j, "lo", "complement payoff"), "lo");
    Rat hi = rat_of(need(j, "hi", "complement payoff"), "hi");
    if (!(lo < hi)) throw ConfigError("complement payoff needs lo < hi");
    return complement_in_interval(payoff_from_json(need(j, "of", "complement payoff")), lo, hi);
  }
  throw ConfigError("unknown payoff kind '" + kind + "'");
}

BobPtr bob_from_json(const json& j, const PayoffSet& payoff, std::shared_ptr<const OrderedDomain> domain) {
  BobPtr bob = base_bob(name_of(j, "bob", "bob"), j, &payoff, domain);
  for (const auto& w : wraps_of(j)) {
    if (w == "shrink") {
      if (!domain->dense()) throw ConfigError("shrink wrap needs a dense domain");
      bob = shrink_wrap(bob);
    } else if (w == "rationalize") {
      if (domain->canonical_name() == "integers") throw ConfigError("rationalize wrap needs a dense domain");
      bob = rationalize_wrap(bob);
    } else {
      throw ConfigError("unknown wrap '" + w + "'");
    }
  }
  return bob;
}

bool bob_eliminates_enumeration(const json& j) {
  std::string name = j.is_string() ? j.get<std::string>() : j.value("bob", "");
  if (name.starts_with("coded(") && name.ends_with(")")) name = name.substr(6, name.size() - 7);
  return name == "enumeration" || name == "enumeration-coding";
}

AliceFactory alice_from_json(const json& j, const PayoffSet& payoff, BobPtr bob,
                             std::shared_ptr<const OrderedDomain> domain) {
  const std::string name = name_of(j, "alice", "alice");
  if (name == "midpoint-up") return [] { return std::make_unique<MidpointUpAlice>(); };
  if (name == "random") {
    const std::uint64_t seed = seed_of(j, 0);
    Bias bias = Bias::Uniform;
    if (j.is_object() && j.contains("bias")) {
      const std::string b = j["bias"].is_string() ? j["bias"].get<std::string>() : "";
      if (b == "high") bias = Bias::High;
      else if (b == "low") bias = Bias::Low;
      else if (b != "uniform") throw ConfigError("bias must be uniform, high or low");
    }
    return [seed, bias] { return std::make_unique<RandomAlice>(seed, bias); };
  }
  if (name == "target") {
    Rat x = rat_of(need(j, "x", "target alice"), "target x");
    std::size_t budget = 64;
    if (j.contains("budget")) {
      if (!is_count(j["budget"])) throw ConfigError("budget must be a non-negative integer");
      budget = j["budget"].get<std::size_t>();
    }
    if (!domain->dense()) throw ConfigError("target alice needs a dense domain");
    if (!domain->contains(x)) throw ConfigError("target " + x.str() + " is not in the domain");
    return [bob, x, budget] { return std::make_unique<TargetAlice>(bob, x, budget); };
  }
  if (name == "perfect-cantor") {
    if (!payoff.has_cantor_core()) throw ConfigError("perfect-cantor alice needs a payoff with a Cantor core");
    if (domain->canonical_name() != "rationals") throw ConfigError("perfect-cantor alice needs the rationals domain");
    return [] { return std::make_unique<PerfectCantorAlice>(); };
  }
  throw ConfigError("unknown alice '" + name + "'");
}

RunConfig run_config_from_json(const json& j) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  RunConfig c;
  try {
    if (j.contains("game")) c.game = parse_game_kind(j["game"].get<std::string>());
    if (j.contains("domain")) c.domain = j["domain"].get<std::string>();
    for (const char* key : {"rounds", "N", "seed"})
      if (j.contains(key) && !is_count(j[key])) throw ConfigError(std::string(key) + " must be a non-negative integer");
    if (j.contains("rounds")) c.rounds = j["rounds"].get<std::size_t>();
    if (j.contains("N")) c.rounds = j["N"].get<std::size_t>();
    if (j.contains("seed")) c.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("out")) c.out = j["out"].get<std::string>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad config field: ") + e.what());
  } catch (const GameError& e) {
    throw ConfigError(e.what());
  } catch (const ParseError& e) {
    throw ConfigError(e.what());
  }
  c.payoff = j.value("payoff", json());
  c.alice = j.value("alice", json());
  c.bob = j.value("bob", json());
  // A top-level "wrap" sits next to a bare bob name.
  if (j.contains("wrap")) {
    if (!c.bob.is_string()) throw ConfigError("top-level 'wrap' needs 'bob' to be a name");
    c.bob = json{{"bob", c.bob}, {"wrap", j["wrap"]}};
  }
  if (c.alice.is_null()) throw ConfigError("config is missing 'alice'");
  if (c.bob.is_null()) throw ConfigError("config is missing 'bob'");
  return c;
}

json to_json(const RunConfig& c) {
  json j{{"game", game_kind_name(c.game)}, {"domain", c.domain}, {"alice", c.alice},  {"bob", c.bob},
         {"rounds", c.rounds},            {"seed", c.seed},     {"out", c.out}};
  if (!c.payoff.is_null()) j["payoff"] = c.payoff;
  return j;
}

RunSetup resolve(const RunConfig& c) {
  RunSetup s;
  s.config = c;
  try {
    s.domain = make_domain(c.domain);
  } catch (const std::exception& e) {
    throw ConfigError(e.what());
  }
  try {
    s.payoff = c.payoff.is_null() ? PayoffSet("none", [](const Rat&) { return false; }) : payoff_from_json(c.payoff);
    s.bob = bob_from_json(c.bob, *s.payoff, s.domain);
    s.alice = alice_from_json(c.alice, *s.payoff, s.bob, s.domain);
  } catch (const ConfigError&) {
    throw;
  } catch (const CapabilityMissing& e) {
    throw ConfigError(e.what());
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad descriptor: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  if (c.payoff.is_null()) s.payoff.reset();
  return s;
}

json strategy_roster() {
  return json{
      {"alice", json::array({json{{"name", "midpoint-up"}},
                             json{{"name", "random"}, {"fields", {"seed", "bias"}}},
                             json{{"name", "target"}, {"fields", {"x", "budget"}}},
                             json{{"name", "perfect-cantor"}, {"needs", "cantor payoff"}}})},
      {"bob", json::array({json{{"name", "midpoint"}},
                           json{{"name", "random"}, {"fields", {"seed"}}},
                           json{{"name", "fraction"}, {"fields", {"fraction"}}},
                           json{{"name", "enumeration"}, {"needs", "enumerable payoff"}},
                           json{{"name", "enumeration-coding"}, {"needs", "enumerable payoff"}},
                           json{{"name", "coded(<inner>)"}}})},
      {"wrap", json::array({"shrink", "rationalize"})},
      {"payoff", json::array({"finite", "rationals", "cantor", "union", "complementInInterval"})},
      {"domain", domain_names()},
  };
}

}  // namespace baker
