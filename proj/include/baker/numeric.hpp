#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace baker {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Backed by GMP's mpq_class.
class Rat {
 public:
  Rat() = default;
  Rat(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rat(long num, long den);
  Rat(const mpz_class& num, const mpz_class& den);
  explicit Rat(const mpz_class& v) : q_(v) {}
  explicit Rat(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  /// Parses "num/den", an integer "n", or a finite decimal "d.ddd".
  static Rat parse(std::string_view text);

  /// Lowest-terms "num/den" text; integers still carry "/1".
  std::string str() const;

  const mpq_class& raw() const { return q_; }
  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  mpz_class floor() const;
  mpz_class ceil() const;
  double approx() const { return q_.get_d(); }

  Rat operator-() const { return Rat(mpq_class(-q_)); }
  friend Rat operator+(const Rat& a, const Rat& b) { return Rat(mpq_class(a.q_ + b.q_)); }
  friend Rat operator-(const Rat& a, const Rat& b) { return Rat(mpq_class(a.q_ - b.q_)); }
  friend Rat operator*(const Rat& a, const Rat& b) { return Rat(mpq_class(a.q_ * b.q_)); }
  friend Rat operator/(const Rat& a, const Rat& b);
  Rat& operator+=(const Rat& b) { q_ += b.q_; return *this; }
  Rat& operator-=(const Rat& b) { q_ -= b.q_; return *this; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class q_;
};

Rat abs(const Rat& r);
Rat midpoint(const Rat& a, const Rat& b);
Rat pow2_inverse(unsigned k);   // 2^-k
Rat pow3_inverse(unsigned k);   // 3^-k
Rat pow10_inverse(unsigned k);  // 10^-k

/// A rational extended with the two infinite sentinels. Arithmetic is only
/// available on the finite alternative (through finite()).
class ExtRat {
 public:
  enum class Kind : std::uint8_t { NegInf, Finite, PosInf };

  ExtRat() : kind_(Kind::Finite) {}
  ExtRat(Rat r) : kind_(Kind::Finite), value_(std::move(r)) {}  // NOLINT
  ExtRat(long v) : kind_(Kind::Finite), value_(v) {}            // NOLINT

  static ExtRat neg_inf() { return ExtRat(Kind::NegInf); }
  static ExtRat pos_inf() { return ExtRat(Kind::PosInf); }

  /// Accepts everything Rat::parse accepts plus "+inf" / "-inf".
  static ExtRat parse(std::string_view text);
  std::string str() const;

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  bool is_pos_inf() const { return kind_ == Kind::PosInf; }
  bool is_neg_inf() const { return kind_ == Kind::NegInf; }

  /// Throws std::logic_error on an infinite value.
  const Rat& finite() const;

  friend bool operator==(const ExtRat& a, const ExtRat& b) {
    return a.kind_ == b.kind_ && (a.kind_ != Kind::Finite || a.value_ == b.value_);
  }
  friend std::strong_ordering operator<=>(const ExtRat& a, const ExtRat& b);

 private:
  explicit ExtRat(Kind k) : kind_(k) {}
  Kind kind_;
  Rat value_;
};

const ExtRat& min(const ExtRat& a, const ExtRat& b);
const ExtRat& max(const ExtRat& a, const ExtRat& b);

/// Open interval (lo, hi). Empty when lo >= hi.
struct Interval {
  ExtRat lo = ExtRat::neg_inf();
  ExtRat hi = ExtRat::pos_inf();

  bool empty() const { return !(lo < hi); }
  bool contains(const Rat& x) const { return lo < ExtRat(x) && ExtRat(x) < hi; }
  /// Closure of `inner` lies inside this open interval.
  bool contains_closure_of(const Interval& inner) const;
  std::optional<Rat> width() const;
  std::string str() const { return "(" + lo.str() + ", " + hi.str() + ")"; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

}  // namespace baker
