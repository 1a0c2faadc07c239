#include "baker/numeric.hpp"

#include <algorithm>
#include <cctype>

namespace baker {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
  bool neg = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw ParseError("malformed rational '" + std::string(whole) + "'");
  mpz_class v(std::string(s), 10);
  return neg ? mpz_class(-v) : v;
}

}  // namespace

Rat::Rat(long num, long den) : q_(mpz_class(num), mpz_class(den == 0 ? 1 : den)) {
  if (den == 0) throw std::domain_error("zero denominator");
  q_.canonicalize();
}

Rat::Rat(const mpz_class& num, const mpz_class& den) : q_(num, den == 0 ? mpz_class(1) : den) {
  if (den == 0) throw std::domain_error("zero denominator");
  q_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) throw ParseError("empty rational");

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    mpz_class num = parse_integer(s.substr(0, slash), text);
    std::string_view den_text = s.substr(slash + 1);
    if (!all_digits(den_text)) throw ParseError("malformed denominator in '" + std::string(text) + "'");
    mpz_class den(std::string(den_text), 10);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rat(num, den);
  }
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    bool neg = !int_part.empty() && int_part.front() == '-';
    if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) int_part.remove_prefix(1);
    if (int_part.empty()) int_part = "0";
    if (!all_digits(int_part) || !all_digits(frac)) throw ParseError("malformed decimal '" + std::string(text) + "'");
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    mpz_class num = mpz_class(std::string(int_part), 10) * scale + mpz_class(std::string(frac), 10);
    return Rat(neg ? mpz_class(-num) : num, scale);
  }
  return Rat(parse_integer(s, text));
}

std::string Rat::str() const { return q_.get_num().get_str() + "/" + q_.get_den().get_str(); }

mpz_class Rat::floor() const {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

mpz_class Rat::ceil() const {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

Rat operator/(const Rat& a, const Rat& b) {
  if (b.sign() == 0) throw std::domain_error("division by zero");
  return Rat(mpq_class(a.q_ / b.q_));
}

Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }

Rat midpoint(const Rat& a, const Rat& b) { return (a + b) * Rat(1, 2); }

namespace {
Rat pow_inverse(unsigned long base, unsigned k) {
  mpz_class d;
  mpz_ui_pow_ui(d.get_mpz_t(), base, k);
  return Rat(mpz_class(1), d);
}
}  // namespace

Rat pow2_inverse(unsigned k) { return pow_inverse(2, k); }
Rat pow3_inverse(unsigned k) { return pow_inverse(3, k); }
Rat pow10_inverse(unsigned k) { return pow_inverse(10, k); }

ExtRat ExtRat::parse(std::string_view text) {
  if (text == "+inf" || text == "inf") return pos_inf();
  if (text == "-inf") return neg_inf();
  return ExtRat(Rat::parse(text));
}

std::string ExtRat::str() const {
  switch (kind_) {
    case Kind::NegInf: return "-inf";
    case Kind::PosInf: return "+inf";
    case Kind::Finite: break;
  }
  return value_.str();
}

const Rat& ExtRat::finite() const {
  if (kind_ != Kind::Finite) throw std::logic_error("arithmetic on infinite bound " + str());
  return value_;
}

std::strong_ordering operator<=>(const ExtRat& a, const ExtRat& b) {
  if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_);
  if (a.kind_ != ExtRat::Kind::Finite) return std::strong_ordering::equal;
  return a.value_ <=> b.value_;
}

const ExtRat& min(const ExtRat& a, const ExtRat& b) { return b < a ? b : a; }
const ExtRat& max(const ExtRat& a, const ExtRat& b) { return a < b ? b : a; }

bool Interval::contains_closure_of(const Interval& inner) const {
  if (inner.empty() || !inner.lo.is_finite() || !inner.hi.is_finite()) return false;
  return lo < inner.lo && inner.hi < hi;
}

std::optional<Rat> Interval::width() const {
  if (!lo.is_finite() || !hi.is_finite()) return std::nullopt;
  return hi.finite() - lo.finite();
}

}  // namespace baker
