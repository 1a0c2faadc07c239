#include "baker/codec.hpp"

#include <algorithm>
#include <charconv>

namespace baker {

namespace {

mpz_class pow_ui(unsigned long base, unsigned long exp) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

// Number of strings shorter than `len` over an alphabet of size `base`.
mpz_class shortlex_offset(unsigned long base, std::size_t len) {
  return (pow_ui(base, len) - 1) / (base - 1);
}

std::size_t shortlex_length(unsigned long base, const mpz_class& rank) {
  std::size_t len = 0;
  while (shortlex_offset(base, len + 1) <= rank) ++len;
  return len;
}

std::string padded_digits(const mpz_class& v, int base, std::size_t width) {
  std::string s = v == 0 ? std::string() : v.get_str(base);
  if (s.size() < width) s.insert(0, width - s.size(), '0');
  return s;
}

mpz_class floor_div(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Splits m into integer part and p fractional decimal digits (m / 10^p).
struct Fixed {
  mpz_class int_part;
  std::string digits;
};

Fixed split(const mpz_class& m, const mpz_class& scale, std::size_t p) {
  mpz_class ip = floor_div(m, scale);
  mpz_class frac = m - ip * scale;
  return {ip, padded_digits(frac, 10, p)};
}

}  // namespace

std::string bytes_to_base9(std::span<const std::uint8_t> payload) {
  mpz_class value = 0;
  for (std::uint8_t b : payload) value = value * 256 + b;
  mpz_class rank = shortlex_offset(256, payload.size()) + value;
  std::size_t len = shortlex_length(9, rank);
  return padded_digits(rank - shortlex_offset(9, len), 9, len);
}

Bytes base9_to_bytes(std::string_view digits) {
  mpz_class value = 0;
  for (char c : digits) {
    if (c < '0' || c > '8') throw NotEncoded("payload digit out of range");
    value = value * 9 + (c - '0');
  }
  mpz_class rank = shortlex_offset(9, digits.size()) + value;
  std::size_t len = shortlex_length(256, rank);
  mpz_class rest = rank - shortlex_offset(256, len);
  Bytes out(len, 0);
  for (std::size_t i = len; i-- > 0;) {
    mpz_class byte = rest % 256;
    out[i] = static_cast<std::uint8_t>(byte.get_ui());
    rest /= 256;
  }
  return out;
}

EncodedMove encode_move(std::span<const std::uint8_t> payload, const Rat& lo, const Rat& hi) {
  if (!(lo < hi)) throw IntervalEmpty("encode_history: empty interval (" + lo.str() + ", " + hi.str() + ")");
  const std::string body = "9" + bytes_to_base9(payload) + "9";
  const Rat mid = midpoint(lo, hi);

  for (std::size_t p = 1;; ++p) {
    const mpz_class scale = pow_ui(10, p);
    const Rat rs(scale);
    // Anchor m / 10^p needs lo <= m/10^p and m/10^p + 10^-p <= hi.
    const mpz_class m_lo = (lo * rs).ceil();
    const mpz_class m_hi = (hi * rs).floor() - 1;
    if (m_lo > m_hi) continue;

    // Nearest to the midpoint, ties to the lower anchor.
    const Rat target = mid * rs;
    const mpz_class below = std::clamp(mpz_class(target.floor()), m_lo, m_hi);
    const mpz_class above = std::clamp(mpz_class(below + 1), m_lo, m_hi);
    const mpz_class best = abs(Rat(above) - target) < abs(Rat(below) - target) ? above : below;

    Fixed anchor = split(best, scale, p);
    const std::string frac = anchor.digits + body;
    const mpz_class frame_scale = pow_ui(10, frac.size());
    Rat value(anchor.int_part * frame_scale + mpz_class(frac, 10), frame_scale);
    return {std::move(value), Bytes(payload.begin(), payload.end())};
  }
}

Rat encode_history(std::span<const std::uint8_t> payload, const Rat& lo, const Rat& hi) {
  return encode_move(payload, lo, hi).value;
}

std::optional<std::string> terminating_fraction_digits(const Rat& r) {
  mpz_class den = r.den();
  unsigned long twos = mpz_remove(den.get_mpz_t(), den.get_mpz_t(), mpz_class(2).get_mpz_t());
  unsigned long fives = mpz_remove(den.get_mpz_t(), den.get_mpz_t(), mpz_class(5).get_mpz_t());
  if (den != 1) return std::nullopt;
  std::size_t n = std::max(twos, fives);
  const mpz_class scale = pow_ui(10, n);
  const mpz_class scaled = r.num() * scale / r.den();  // exact
  const mpz_class frac = scaled - r.floor() * scale;
  return padded_digits(frac, 10, n);
}

Bytes decode_history(const Rat& r) {
  auto digits = terminating_fraction_digits(r);
  if (!digits) throw NotEncoded(r.str() + " has no terminating decimal expansion");
  const std::string& d = *digits;
  // The payload holds no 9, so the frame is the last two 9s; anchor digits
  // before them are unrestricted.
  if (d.size() < 3 || d.back() != '9') throw NotEncoded(r.str() + " carries no frame");
  const std::size_t close = d.size() - 1;
  const auto open = d.rfind('9', close - 1);
  if (open == std::string::npos || open == 0) throw NotEncoded(r.str() + " carries a malformed frame");
  return base9_to_bytes(std::string_view(d).substr(open + 1, close - open - 1));
}

Bytes serialize_history(std::span<const Rat> history) {
  std::string s = std::to_string(history.size()) + ";";
  for (const Rat& r : history) {
    std::string t = r.str();
    s += std::to_string(t.size()) + ":" + t;
  }
  return to_bytes(s);
}

std::vector<Rat> deserialize_history(std::span<const std::uint8_t> bytes) {
  std::string_view s(reinterpret_cast<const char*>(bytes.data()), bytes.size());
  auto read_number = [&](char terminator) -> std::size_t {
    auto end = s.find(terminator);
    if (end == std::string_view::npos || end == 0) throw NotEncoded("malformed history frame");
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + end, v);
    if (ec != std::errc() || ptr != s.data() + end) throw NotEncoded("malformed history frame");
    s.remove_prefix(end + 1);
    return v;
  };
  std::size_t count = read_number(';');
  std::vector<Rat> out;
  out.reserve(std::min<std::size_t>(count, 1024));
  for (std::size_t i = 0; i < count; ++i) {
    std::size_t len = read_number(':');
    if (len > s.size()) throw NotEncoded("truncated history frame");
    try {
      out.push_back(Rat::parse(s.substr(0, len)));
    } catch (const ParseError& e) {
      throw NotEncoded(std::string("bad rational in history frame: ") + e.what());
    }
    s.remove_prefix(len);
  }
  if (!s.empty()) throw NotEncoded("trailing bytes in history frame");
  return out;
}

}  // namespace baker
