#include "baker/io.hpp"

#include <istream>
#include <set>
#include <sstream>

namespace baker {

using nlohmann::json;

namespace {

// Non-negative integer, whether stored signed or unsigned.
bool is_count(const nlohmann::json& j) {
  return j.is_number_unsigned() || (j.is_number_integer() && j.get<std::int64_t>() >= 0);
}

json parse_line(const std::string& line, std::size_t lineno) {
  try {
    return json::parse(line);
  } catch (const json::parse_error& e) {
    throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
  }
}

std::string string_field(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_string()) throw ParseError(std::string("missing text field '") + key + "'");
  return j[key].get<std::string>();
}

std::uint64_t uint_field(const json& j, const char* key) {
  if (!j.contains(key) || !is_count(j[key]))
    throw ParseError(std::string("missing unsigned field '") + key + "'");
  return j[key].get<std::uint64_t>();
}

std::vector<json> read_lines(std::istream& in) {
  std::vector<json> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(parse_line(line, lineno));
  }
  return out;
}

}  // namespace

json move_json(const Move& m) {
  return json{{"round", m.round}, {"player", std::string(1, player_code(m.player))}, {"value", m.value.str()}};
}

Move move_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("move record must be an object");
  try {
    return Move{uint_field(j, "round"), parse_player(string_field(j, "player")), Rat::parse(string_field(j, "value"))};
  } catch (const GameError& e) {
    throw ParseError(e.what());
  }
}

json transcript_header(const Transcript& tr, const std::optional<std::string>& alice,
                       const std::optional<std::string>& bob) {
  json h{{"domain", tr.domain_name}, {"game", game_kind_name(tr.game)}, {"seed", tr.seed}, {"N", tr.rounds_requested}};
  if (alice) h["alice"] = *alice;
  if (bob) h["bob"] = *bob;
  return h;
}

std::string transcript_jsonl(const Transcript& tr, const std::optional<std::string>& alice,
                             const std::optional<std::string>& bob) {
  std::string out = transcript_header(tr, alice, bob).dump() + "\n";
  for (const Move& m : tr.moves) out += move_json(m).dump() + "\n";
  return out;
}

TranscriptFile parse_transcript_jsonl(std::istream& in) {
  auto lines = read_lines(in);
  if (lines.empty()) throw ParseError("empty transcript");
  const json& h = lines.front();
  if (!h.is_object() || !h.contains("domain")) throw ParseError("first line must be the transcript header");
  TranscriptFile tf;
  tf.domain = string_field(h, "domain");
  try {
    tf.game = parse_game_kind(string_field(h, "game"));
  } catch (const GameError& e) {
    throw ParseError(e.what());
  }
  tf.seed = uint_field(h, "seed");
  tf.rounds = uint_field(h, "N");
  if (h.contains("alice") && h["alice"].is_string()) tf.alice = h["alice"].get<std::string>();
  if (h.contains("bob") && h["bob"].is_string()) tf.bob = h["bob"].get<std::string>();
  for (std::size_t i = 1; i < lines.size(); ++i) tf.moves.push_back(move_from_json(lines[i]));
  return tf;
}

TranscriptFile parse_transcript_jsonl(const std::string& text) {
  std::istringstream in(text);
  return parse_transcript_jsonl(in);
}

json bm_move_json(const BmMove& m) {
  return json{{"round", m.round},
              {"player", std::string(1, player_code(m.player))},
              {"lo", m.interval.lo.str()},
              {"hi", m.interval.hi.str()}};
}

std::string bm_transcript_jsonl(const BmTranscript& tr) {
  json h{{"game", "banach-mazur"}, {"N", tr.rounds_requested}, {"lo", tr.start.lo.str()}, {"hi", tr.start.hi.str()}};
  std::string out = h.dump() + "\n";
  for (const BmMove& m : tr.moves) out += bm_move_json(m).dump() + "\n";
  return out;
}

BmTranscript parse_bm_transcript_jsonl(std::istream& in) {
  auto lines = read_lines(in);
  if (lines.empty()) throw ParseError("empty transcript");
  const json& h = lines.front();
  if (!h.is_object() || h.value("game", "") != "banach-mazur") throw ParseError("not a Banach-Mazur transcript");
  BmTranscript tr;
  tr.rounds_requested = uint_field(h, "N");
  tr.start = {Rat::parse(string_field(h, "lo")), Rat::parse(string_field(h, "hi"))};
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const json& j = lines[i];
    if (!j.is_object()) throw ParseError("move record must be an object");
    try {
      tr.moves.push_back({uint_field(j, "round"), parse_player(string_field(j, "player")),
                          {Rat::parse(string_field(j, "lo")), Rat::parse(string_field(j, "hi"))}});
    } catch (const GameError& e) {
      throw ParseError(e.what());
    }
  }
  return tr;
}

json to_json(const CertificateBundle& b) {
  json certs = json::array();
  for (const auto& c : b.baker) certs.push_back(to_json(c));
  for (const auto& c : b.bm) certs.push_back(to_json(c));
  json out{{"certificates", certs}, {"meta", b.meta}};
  if (b.claimed_eliminations) out["claimedEliminations"] = *b.claimed_eliminations;
  return out;
}

CertificateBundle bundle_from_json(const json& j) {
  if (!j.is_object() || !j.contains("certificates") || !j["certificates"].is_array())
    throw ParseError("certificate file needs a 'certificates' array");
  CertificateBundle b;
  for (const auto& c : j["certificates"]) {
    if (c.is_object() && c.value("type", "") == "bmDisjoint")
      b.bm.push_back(bm_certificate_from_json(c));
    else
      b.baker.push_back(certificate_from_json(c));
  }
  if (j.contains("claimedEliminations")) {
    if (!is_count(j["claimedEliminations"])) throw ParseError("claimedEliminations must be a count");
    b.claimed_eliminations = j["claimedEliminations"].get<std::size_t>();
  }
  if (j.contains("meta")) b.meta = j["meta"];
  return b;
}

VerifyReport verify_baker(const TranscriptFile& tf, const CertificateBundle& certs) {
  VerifyReport rep;
  auto fail = [&](std::string why) {
    rep.ok = false;
    rep.failures.push_back(std::move(why));
  };
  std::shared_ptr<const OrderedDomain> domain;
  try {
    domain = make_domain(tf.domain);
  } catch (const std::exception& e) {
    fail(e.what());
    return rep;
  }
  try {
    replay(tf.moves, domain);
  } catch (const GameError& e) {
    fail(std::string("move log rejected by the referee: ") + e.what());
    return rep;
  }
  if (!certs.bm.empty()) fail("Banach-Mazur certificate supplied for a " + game_kind_name(tf.game) + " transcript");
  std::set<std::size_t> eliminated;
  for (std::size_t i = 0; i < certs.baker.size(); ++i) {
    ++rep.checked;
    CheckResult r = check(certs.baker[i], tf.moves);
    if (!r) fail("certificate " + std::to_string(i) + ": " + r.reason);
    if (auto e = std::get_if<EliminationCertificate>(&certs.baker[i])) {
      if (!eliminated.insert(e->index).second) fail("duplicate elimination certificate for w_" + std::to_string(e->index));
    }
  }
  if (certs.claimed_eliminations) {
    for (std::size_t n = 0; n < *certs.claimed_eliminations; ++n)
      if (!eliminated.count(n)) fail("claimed elimination of w_" + std::to_string(n) + " has no certificate");
  }
  return rep;
}

VerifyReport verify_bm(const BmTranscript& tr, const CertificateBundle& certs) {
  VerifyReport rep;
  if (!certs.baker.empty()) {
    rep.ok = false;
    rep.failures.push_back("game certificate supplied for a Banach-Mazur transcript");
  }
  for (std::size_t i = 0; i < certs.bm.size(); ++i) {
    ++rep.checked;
    CheckResult r = check(certs.bm[i], tr);
    if (!r) {
      rep.ok = false;
      rep.failures.push_back("certificate " + std::to_string(i) + ": " + r.reason);
    }
  }
  return rep;
}

}  // namespace baker
