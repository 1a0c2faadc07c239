#include "baker/sampling.hpp"

#include <algorithm>
#include <cmath>

namespace baker {

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  std::uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::optional<Rat> random_between(std::mt19937_64& rng, const ExtRat& lo, const ExtRat& hi,
                                  const OrderedDomain& domain, Bias bias) {
  if (!domain.pick_between(lo, hi)) return std::nullopt;

  std::uniform_int_distribution<long> span_dist(1, 10);
  Rat flo, fhi;
  if (lo.is_finite() && hi.is_finite()) {
    flo = lo.finite();
    fhi = hi.finite();
  } else if (lo.is_finite()) {
    flo = lo.finite();
    fhi = flo + Rat(span_dist(rng));
  } else if (hi.is_finite()) {
    fhi = hi.finite();
    flo = fhi - Rat(span_dist(rng));
  } else {
    flo = Rat(-1);
    fhi = Rat(2);
  }

  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double t = unit(rng);
  if (bias == Bias::High) t = 1.0 - std::pow(1.0 - t, 4.0);
  if (bias == Bias::Low) t = std::pow(t, 4.0);

  if (!domain.dense()) {
    mpz_class first = flo.floor() + 1;
    mpz_class last = fhi.ceil() - 1;
    if (first > last) return domain.pick_between(lo, hi);
    mpz_class count = last - first + 1;
    constexpr unsigned long kGrid = 1UL << 30;
    auto g = static_cast<unsigned long>(std::min(t * static_cast<double>(kGrid), static_cast<double>(kGrid - 1)));
    mpz_class offset = count * g / kGrid;
    return Rat(mpz_class(first + offset));
  }

  constexpr long kGrid = 1L << 16;
  long centre = std::clamp(static_cast<long>(t * kGrid), 0L, kGrid);
  long half = 1L + static_cast<long>(rng() % 64);
  long u1 = std::max(0L, centre - half);
  long u2 = std::min(kGrid, centre + half);
  const Rat w = fhi - flo;
  Rat sub_lo = flo + w * Rat(u1, kGrid);
  Rat sub_hi = flo + w * Rat(u2, kGrid);
  Rat r = rational_witness(sub_lo, sub_hi);
  if (!domain.contains(r)) return domain.pick_between(lo, hi);
  return r;
}

}  // namespace baker
