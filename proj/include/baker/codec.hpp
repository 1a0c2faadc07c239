#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "baker/numeric.hpp"

namespace baker {

using Bytes = std::vector<std::uint8_t>;

class IntervalEmpty : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotEncoded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A rational carrying a payload in its decimal expansion.
///
/// Fractional digits: p >= 1 anchor digits, a sentinel 9, the payload as
/// base-9 digits, a closing 9. The anchor is the p-digit decimal nearest the
/// interval midpoint (ties go down) whose open slot (anchor, anchor + 10^-p)
/// fits in the interval, with p as small as possible, so the value lies inside
/// the slot. Anchor digits may include 9: intervals such as (0.191, 0.1927)
/// admit no 9-free anchor. Decoding reads the frame from the right, which is
/// unambiguous because payload digits never include 9.
struct EncodedMove {
  Rat value;
  Bytes payload;
};

/// Bijection between byte strings and base-9 digit strings, both ranked in
/// shortlex order (so the empty payload has no digits and <0x00> is "0").
std::string bytes_to_base9(std::span<const std::uint8_t> payload);
Bytes base9_to_bytes(std::string_view digits);

Rat encode_history(std::span<const std::uint8_t> payload, const Rat& lo, const Rat& hi);
EncodedMove encode_move(std::span<const std::uint8_t> payload, const Rat& lo, const Rat& hi);

/// Throws NotEncoded when r is not a terminating decimal or its fractional
/// digits do not end in a frame preceded by at least one anchor digit.
Bytes decode_history(const Rat& r);

/// Fractional decimal digits of r - floor(r), or nullopt when the expansion
/// does not terminate.
std::optional<std::string> terminating_fraction_digits(const Rat& r);

/// Length-prefixed serialization used for coding frames:
///   "<count>;" followed by "<len>:<num/den>" per element.
Bytes serialize_history(std::span<const Rat> history);
std::vector<Rat> deserialize_history(std::span<const std::uint8_t> bytes);

inline Bytes to_bytes(std::string_view s) { return Bytes(s.begin(), s.end()); }

}  // namespace baker
