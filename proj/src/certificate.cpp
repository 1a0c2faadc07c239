#include "baker/certificate.hpp"

namespace baker {

using nlohmann::json;

namespace {

// Non-negative integer, whether stored signed or unsigned.
bool is_count(const nlohmann::json& j) {
  return j.is_number_unsigned() || (j.is_number_integer() && j.get<std::int64_t>() >= 0);
}

std::vector<Rat> alice_moves(std::span<const Move> moves) {
  std::vector<Rat> out;
  for (const Move& m : moves)
    if (m.player == Player::Alice) out.push_back(m.value);
  return out;
}

bool strictly_inside(const RoundBounds& b, const Rat& x) { return b.alice < x && x < b.bob; }

// Closed [left, right] inside the open (lo, hi).
bool closure_inside(const CantorCore& c, const Rat& lo, const Rat& hi) { return lo < c.left && c.right() < hi; }

bool nested(const CantorCore& inner, const CantorCore& outer) {
  return inner.depth > outer.depth && outer.left <= inner.left && inner.right() <= outer.right();
}

std::string at_round(std::size_t n) { return "round " + std::to_string(n) + ": "; }

Rat rat_field(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_string()) throw ParseError(std::string("missing rational field '") + key + "'");
  return Rat::parse(j[key].get<std::string>());
}

std::size_t size_field(const json& j, const char* key) {
  if (!j.contains(key) || !is_count(j[key]))
    throw ParseError(std::string("missing count field '") + key + "'");
  return j[key].get<std::size_t>();
}

json bounds_json(const std::vector<RoundBounds>& bounds) {
  json arr = json::array();
  for (const auto& b : bounds) arr.push_back(json::array({b.alice.str(), b.bob.str()}));
  return arr;
}

std::vector<RoundBounds> bounds_from(const json& j) {
  if (!j.is_array()) throw ParseError("bounds must be an array");
  std::vector<RoundBounds> out;
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string())
      throw ParseError("bound pair must be [\"a\", \"b\"]");
    out.push_back({Rat::parse(pair[0].get<std::string>()), Rat::parse(pair[1].get<std::string>())});
  }
  return out;
}

json core_json(const CantorCore& c) { return json{{"depth", c.depth}, {"left", c.left.str()}}; }

CantorCore core_from(const json& j) {
  if (!j.is_object()) throw ParseError("core must be an object");
  return CantorCore{static_cast<unsigned>(size_field(j, "depth")), rat_field(j, "left")};
}

}  // namespace

SurvivalStatus survival_status(std::span<const Move> moves, const Rat& x) {
  SurvivalStatus st;
  const auto bounds = round_bounds(moves);
  for (std::size_t n = 0; n < bounds.size(); ++n) {
    const bool ok = strictly_inside(bounds[n], x);
    st.legal.push_back(ok);
    if (!ok && !st.eliminated_at) st.eliminated_at = n;
  }
  if (!st.eliminated_at) st.certificate = SurvivalCertificate{x, bounds};
  return st;
}

std::optional<EliminationCertificate> elimination_certificate(std::span<const Move> moves, const Rat& w,
                                                              std::size_t index, const std::string& enumeration) {
  const auto bounds = round_bounds(moves);
  for (std::size_t n = 0; n < bounds.size(); ++n) {
    if (w <= bounds[n].alice) return EliminationCertificate{index, w, n, Side::Below, bounds[n].alice, enumeration};
    if (w >= bounds[n].bob) return EliminationCertificate{index, w, n, Side::Above, bounds[n].bob, enumeration};
  }
  return std::nullopt;
}

EliminationReport eliminate_all(std::span<const Move> moves, const PayoffSet& w, std::size_t limit) {
  EliminationReport rep;
  for (std::size_t n = 0; n < limit; ++n) {
    auto wn = w.enumerate(n);
    if (!wn) break;
    if (auto c = elimination_certificate(moves, *wn, n, w.enumeration_name()))
      rep.certificates.push_back(std::move(*c));
    else
      rep.surviving.push_back(n);
  }
  return rep;
}

CoreChainCertificate core_chain_certificate(std::span<const Move> moves, std::span<const CantorCore> cores) {
  const auto bounds = round_bounds(moves);
  if (bounds.empty()) throw NoRounds();
  if (cores.empty()) throw std::invalid_argument("core chain is empty");
  CantorCore closing =
      cantor_refine(cores.back(), Interval{ExtRat(bounds.back().alice), ExtRat(bounds.back().bob)});
  SurvivalCertificate survivor{closing.left, bounds};
  return {std::vector<CantorCore>(cores.begin(), cores.end()), closing, std::move(survivor)};
}

BracketCertificate bracket_certificate(std::span<const Move> moves) {
  const auto bounds = round_bounds(moves);
  if (bounds.empty()) throw NoRounds();
  return {bounds.size(), bounds.back().alice, bounds.back().bob};
}

// ---------------------------------------------------------------------------

CheckResult check(const SurvivalCertificate& c, std::span<const Move> moves) {
  const auto bounds = round_bounds(moves);
  if (c.bounds.size() != bounds.size())
    return CheckResult::fail("survival certificate covers " + std::to_string(c.bounds.size()) + " rounds, log has " +
                             std::to_string(bounds.size()));
  for (std::size_t n = 0; n < bounds.size(); ++n) {
    if (!(c.bounds[n] == bounds[n])) return CheckResult::fail(at_round(n) + "recorded bounds differ from the log");
    if (!strictly_inside(bounds[n], c.x))
      return CheckResult::fail(at_round(n) + c.x.str() + " is not inside (" + bounds[n].alice.str() + ", " +
                               bounds[n].bob.str() + ")");
  }
  return CheckResult::pass();
}

CheckResult check(const EliminationCertificate& c, std::span<const Move> moves) {
  const auto bounds = round_bounds(moves);
  if (c.round >= bounds.size()) return CheckResult::fail("elimination round beyond the log");
  const Rat& logged = c.side == Side::Below ? bounds[c.round].alice : bounds[c.round].bob;
  if (!(c.bound == logged)) return CheckResult::fail(at_round(c.round) + "bound " + c.bound.str() + " is not in the log");
  for (std::size_t m = c.round; m < bounds.size(); ++m) {
    const bool out = c.side == Side::Below ? c.value <= bounds[m].alice : c.value >= bounds[m].bob;
    if (!out) return CheckResult::fail(at_round(m) + c.value.str() + " is legal again");
  }
  return CheckResult::pass();
}

CheckResult check(const CoreChainCertificate& c, std::span<const Move> moves) {
  const auto bounds = round_bounds(moves);
  const auto alice = alice_moves(moves);
  if (bounds.empty()) return CheckResult::fail("no completed round");
  if (c.cores.size() != alice.size())
    return CheckResult::fail("chain has " + std::to_string(c.cores.size()) + " cores for " +
                             std::to_string(alice.size()) + " alice moves");
  const CantorCore root{0, Rat(0)};
  for (std::size_t n = 0; n < c.cores.size(); ++n) {
    const CantorCore& core = c.cores[n];
    if (!is_construction_interval(core)) return CheckResult::fail(at_round(n) + "not a construction interval");
    if (!nested(core, n == 0 ? root : c.cores[n - 1])) return CheckResult::fail(at_round(n) + "cores do not nest");
    if (!(alice[n] == core.left)) return CheckResult::fail(at_round(n) + "alice did not play the core's left end");
    if (!cantor_contains(alice[n])) return CheckResult::fail(at_round(n) + "alice's move is not in the Cantor set");
    if (n > 0 && !closure_inside(core, bounds[n - 1].alice, bounds[n - 1].bob))
      return CheckResult::fail(at_round(n) + "core does not fit the legal region");
  }
  if (!is_construction_interval(c.closing) || !nested(c.closing, c.cores.back()))
    return CheckResult::fail("closing core is not a deeper construction interval");
  if (!closure_inside(c.closing, bounds.back().alice, bounds.back().bob))
    return CheckResult::fail("closing core does not fit the final legal region");
  if (!(c.survivor.x == c.closing.left)) return CheckResult::fail("survivor is not the closing core's left end");
  if (!cantor_contains(c.survivor.x)) return CheckResult::fail("survivor is not in the Cantor set");
  return check(c.survivor, moves);
}

CheckResult check(const BracketCertificate& c, std::span<const Move> moves) {
  const auto bounds = round_bounds(moves);
  if (c.rounds != bounds.size() || bounds.empty()) return CheckResult::fail("bracket round count differs from the log");
  if (!(c.alice == bounds.back().alice && c.bob == bounds.back().bob))
    return CheckResult::fail("bracket differs from the final bounds");
  return CheckResult::pass();
}

CheckResult check(const Certificate& c, std::span<const Move> moves) {
  return std::visit([&](const auto& v) { return check(v, moves); }, c);
}

// ---------------------------------------------------------------------------

json to_json(const SurvivalCertificate& c) {
  return json{{"type", "survival"}, {"x", c.x.str()}, {"rounds", c.rounds()}, {"bounds", bounds_json(c.bounds)}};
}

json to_json(const EliminationCertificate& c) {
  return json{{"type", "elimination"},
              {"index", c.index},
              {"value", c.value.str()},
              {"round", c.round},
              {"side", c.side == Side::Below ? "below" : "above"},
              {"bound", c.bound.str()},
              {"enumeration", c.enumeration}};
}

json to_json(const CoreChainCertificate& c) {
  json cores = json::array();
  for (const auto& k : c.cores) cores.push_back(core_json(k));
  return json{{"type", "coreChain"}, {"cores", cores}, {"closing", core_json(c.closing)}, {"survivor", to_json(c.survivor)}};
}

json to_json(const BracketCertificate& c) {
  return json{{"type", "bracket"},
              {"rounds", c.rounds},
              {"alice", c.alice.str()},
              {"bob", c.bob.str()},
              {"width", c.width().str()}};
}

json to_json(const Certificate& c) {
  return std::visit([](const auto& v) { return to_json(v); }, c);
}

Certificate certificate_from_json(const json& j) {
  if (!j.is_object() || !j.contains("type") || !j["type"].is_string())
    throw ParseError("certificate needs a string 'type'");
  const std::string type = j["type"].get<std::string>();
  if (type == "survival") {
    SurvivalCertificate c{rat_field(j, "x"), bounds_from(j.value("bounds", json()))};
    if (size_field(j, "rounds") != c.rounds()) throw ParseError("survival 'rounds' disagrees with 'bounds'");
    return c;
  }
  if (type == "elimination") {
    EliminationCertificate c;
    c.index = size_field(j, "index");
    c.value = rat_field(j, "value");
    c.round = size_field(j, "round");
    const std::string side = j.value("side", "");
    if (side != "below" && side != "above") throw ParseError("elimination 'side' must be below or above");
    c.side = side == "below" ? Side::Below : Side::Above;
    c.bound = rat_field(j, "bound");
    c.enumeration = j.value("enumeration", "");
    return c;
  }
  if (type == "coreChain") {
    CoreChainCertificate c;
    if (!j.contains("cores") || !j["cores"].is_array()) throw ParseError("coreChain needs 'cores'");
    for (const auto& k : j["cores"]) c.cores.push_back(core_from(k));
    c.closing = core_from(j.value("closing", json()));
    auto surv = certificate_from_json(j.value("survivor", json()));
    if (!std::holds_alternative<SurvivalCertificate>(surv)) throw ParseError("coreChain survivor must be survival");
    c.survivor = std::get<SurvivalCertificate>(std::move(surv));
    return c;
  }
  if (type == "bracket") {
    BracketCertificate c{size_field(j, "rounds"), rat_field(j, "alice"), rat_field(j, "bob")};
    return c;
  }
  throw ParseError("unknown certificate type '" + type + "'");
}

}  // namespace baker
