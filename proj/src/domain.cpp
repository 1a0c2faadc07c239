#include "baker/domain.hpp"

#include <stdexcept>

namespace baker {

namespace {

// Least integer strictly greater than r.
mpz_class int_above(const Rat& r) { return r.floor() + 1; }
// Greatest integer strictly less than r.
mpz_class int_below(const Rat& r) { return r.ceil() - 1; }

}  // namespace

std::optional<Rat> RationalDomain::pick_between(const ExtRat& lo, const ExtRat& hi) const {
  if (!(lo < hi)) return std::nullopt;
  if (lo.is_finite() && hi.is_finite()) return midpoint(lo.finite(), hi.finite());
  if (lo.is_finite()) return lo.finite() + Rat(1);
  if (hi.is_finite()) return hi.finite() - Rat(1);
  return Rat(0);
}

std::optional<Rat> IntegerDomain::pick_between(const ExtRat& lo, const ExtRat& hi) const {
  if (!(lo < hi)) return std::nullopt;
  if (lo.is_finite() && hi.is_finite()) {
    mpz_class first = int_above(lo.finite());
    mpz_class last = int_below(hi.finite());
    if (first > last) return std::nullopt;
    mpz_class sum = first + last;
    mpz_class mid;
    mpz_fdiv_q_2exp(mid.get_mpz_t(), sum.get_mpz_t(), 1);
    return Rat(mid);
  }
  if (lo.is_finite()) return Rat(int_above(lo.finite()));
  if (hi.is_finite()) return Rat(int_below(hi.finite()));
  return Rat(0);
}

bool DyadicDomain::contains(const Rat& x) const {
  mpz_class d = x.den();
  return mpz_popcount(d.get_mpz_t()) == 1;
}

std::optional<Rat> DyadicDomain::pick_between(const ExtRat& lo, const ExtRat& hi) const {
  if (!(lo < hi)) return std::nullopt;
  if (lo.is_finite() && hi.is_finite()) return rational_witness(lo.finite(), hi.finite());
  if (lo.is_finite()) return Rat(int_above(lo.finite()));
  if (hi.is_finite()) return Rat(int_below(hi.finite()));
  return Rat(0);
}

std::shared_ptr<const OrderedDomain> make_domain(const std::string& name) {
  if (name == "rationals") return std::make_shared<RationalDomain>();
  if (name == "integers") return std::make_shared<IntegerDomain>();
  if (name == "dyadics") return std::make_shared<DyadicDomain>();
  throw std::invalid_argument("unknown domain '" + name + "'");
}

std::vector<std::string> domain_names() { return {"rationals", "integers", "dyadics"}; }

Rat rational_witness(const Rat& lo, const Rat& hi) {
  if (!(lo < hi)) throw std::invalid_argument("rational_witness: empty interval " + lo.str() + ", " + hi.str());
  // At scale 2^k the least candidate numerator is floor(lo * 2^k) + 1; the
  // first scale where it stays below hi gives the answer in lowest terms.
  mpz_class scale = 1;
  for (;;) {
    Rat scaled_lo = lo * Rat(scale);
    mpz_class m = scaled_lo.floor() + 1;
    Rat candidate(m, scale);
    if (candidate < hi) return candidate;
    scale <<= 1;
  }
}

Rat rational_witness(const ExtRat& lo, const ExtRat& hi) {
  if (!(lo < hi)) throw std::invalid_argument("rational_witness: empty interval");
  if (lo.is_finite() && hi.is_finite()) return rational_witness(lo.finite(), hi.finite());
  if (hi.is_finite()) return Rat(int_below(hi.finite()));
  if (lo.is_finite()) return Rat(int_above(lo.finite()));
  return Rat(0);
}

}  // namespace baker
