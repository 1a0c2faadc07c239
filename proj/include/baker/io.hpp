#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "baker/banach_mazur.hpp"
#include "baker/certificate.hpp"
#include "baker/game.hpp"

namespace baker {

/// Parsed transcript file: header fields plus the move log. Strategy names
/// in the header are informational and never consulted by verification.
struct TranscriptFile {
  std::string domain;
  GameKind game = GameKind::Baker;
  std::uint64_t seed = 0;
  std::size_t rounds = 0;
  std::optional<std::string> alice;
  std::optional<std::string> bob;
  std::vector<Move> moves;
};

nlohmann::json move_json(const Move& m);
Move move_from_json(const nlohmann::json& j);

nlohmann::json transcript_header(const Transcript& tr, const std::optional<std::string>& alice,
                                 const std::optional<std::string>& bob);

/// Header line, then one line per move.
std::string transcript_jsonl(const Transcript& tr, const std::optional<std::string>& alice = std::nullopt,
                             const std::optional<std::string>& bob = std::nullopt);

/// Throws ParseError on malformed input, including a missing header.
TranscriptFile parse_transcript_jsonl(std::istream& in);
TranscriptFile parse_transcript_jsonl(const std::string& text);

nlohmann::json bm_move_json(const BmMove& m);
/// Header {"game": "banach-mazur", "N", "lo", "hi"}, then one line per move.
std::string bm_transcript_jsonl(const BmTranscript& tr);
BmTranscript parse_bm_transcript_jsonl(std::istream& in);

/// Certificate document: {"certificates": [...]} plus free-form metadata.
struct CertificateBundle {
  std::vector<Certificate> baker;
  std::vector<BmDisjointCertificate> bm;
  /// Indices of enumerated payoff elements that must each carry an
  /// elimination certificate; empty when no such claim is made.
  std::optional<std::size_t> claimed_eliminations;
  nlohmann::json meta = nlohmann::json::object();
};

nlohmann::json to_json(const CertificateBundle& b);
CertificateBundle bundle_from_json(const nlohmann::json& j);

struct VerifyReport {
  bool ok = true;
  std::vector<std::string> failures;
  std::size_t checked = 0;
};

/// Replays the log through the referee and re-checks every certificate
/// against it. Uses nothing but the two files.
VerifyReport verify_baker(const TranscriptFile& tr, const CertificateBundle& certs);
VerifyReport verify_bm(const BmTranscript& tr, const CertificateBundle& certs);

}  // namespace baker
