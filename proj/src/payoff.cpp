#include "baker/payoff.hpp"

#include <algorithm>

namespace baker {

namespace {

mpz_class pow3(unsigned k) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 3, k);
  return r;
}

}  // namespace

bool cantor_contains(const Rat& x) {
  if (x.sign() < 0 || x > Rat(1)) return false;
  if (x == Rat(1)) return true;

  // x = p / Q; iterate p <- 3p mod Q reading ternary digits.
  const mpz_class Q = x.den();
  mpz_class p = x.num();
  mpz_class m = Q;
  unsigned long pre = mpz_remove(m.get_mpz_t(), m.get_mpz_t(), mpz_class(3).get_mpz_t());

  auto next_digit = [&](mpz_class& state) -> int {
    state *= 3;
    mpz_class d;
    mpz_fdiv_qr(d.get_mpz_t(), state.get_mpz_t(), state.get_mpz_t(), Q.get_mpz_t());
    return static_cast<int>(d.get_si());
  };

  for (unsigned long i = 0; i < pre; ++i) {
    if (p == 0) return true;
    int d = next_digit(p);
    if (d == 1) return p == 0;  // ...1 terminating equals ...0222...
  }
  if (p == 0) return true;
  // Purely periodic from here.
  const mpz_class start = p;
  do {
    int d = next_digit(p);
    if (d == 1) return p == 0;
  } while (p != start);
  return true;
}

namespace {

// Node [left, left + 3^-depth] of the construction tree.
bool meets_node(const Rat& left, unsigned depth, const ExtRat& lo, const ExtRat& hi) {
  const Rat right = left + pow3_inverse(depth);
  if (!(lo < ExtRat(right))) return false;   // node entirely at or below lo
  if (!(ExtRat(left) < hi)) return false;    // node entirely at or above hi
  if (lo < ExtRat(left)) return true;        // left endpoint is inside (left < hi)
  if (ExtRat(right) < hi) return true;       // right endpoint is inside (right > lo)
  // Interval strictly within the node: look at both children.
  const Rat third = pow3_inverse(depth + 1);
  return meets_node(left, depth + 1, lo, hi) || meets_node(left + third + third, depth + 1, lo, hi);
}

}  // namespace

bool cantor_meets(const Interval& open) {
  if (open.empty()) return false;
  return meets_node(Rat(0), 0, open.lo, open.hi);
}

bool is_construction_interval(const CantorCore& core) {
  Rat scaled = core.left * Rat(pow3(core.depth));
  if (!scaled.is_integer()) return false;
  mpz_class n = scaled.num();
  if (n < 0 || n >= pow3(core.depth)) return false;
  for (unsigned i = 0; i < core.depth; ++i) {
    mpz_class digit = n % 3;
    if (digit == 1) return false;
    n /= 3;
  }
  return true;
}

namespace {

// Leftmost left endpoint at `target` depth inside node (left, depth) that is
// strictly greater than lo.
std::optional<Rat> leftmost_above(const Rat& left, unsigned depth, unsigned target, const ExtRat& lo) {
  if (depth == target) {
    if (lo < ExtRat(left)) return left;
    return std::nullopt;
  }
  const Rat right = left + pow3_inverse(depth);
  if (!(lo < ExtRat(right))) return std::nullopt;
  const Rat third = pow3_inverse(depth + 1);
  if (auto l = leftmost_above(left, depth + 1, target, lo)) return l;
  return leftmost_above(left + third + third, depth + 1, target, lo);
}

}  // namespace

CantorCore cantor_refine(const CantorCore& core, const Interval& bounds, unsigned max_extra_depth) {
  if (bounds.empty()) throw NoRefinement("empty bounds " + bounds.str());
  unsigned first = core.depth + 1;
  if (auto w = bounds.width()) {
    while (!(pow3_inverse(first) < *w)) ++first;
  }
  for (unsigned depth = first; depth <= first + max_extra_depth; ++depth) {
    auto left = leftmost_above(core.left, core.depth, depth, bounds.lo);
    if (!left) continue;
    CantorCore child{depth, *left};
    if (ExtRat(child.right()) < bounds.hi) return child;
  }
  throw NoRefinement("no construction interval inside [" + core.left.str() + ", " + core.right().str() +
                     "] fits " + bounds.str());
}

FinitePointSet::FinitePointSet(std::vector<Rat> points) : points_(std::move(points)) {
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

std::string FinitePointSet::name() const {
  std::string s = "{";
  for (std::size_t i = 0; i < points_.size(); ++i) s += (i ? ", " : "") + points_[i].str();
  return s + "}";
}

bool FinitePointSet::contains(const Rat& x) const { return std::binary_search(points_.begin(), points_.end(), x); }

Interval FinitePointSet::avoid(const Interval& open) const {
  if (open.empty()) throw OracleFault("avoid on empty interval");
  for (const Rat& p : points_) {
    if (open.contains(p)) return {open.lo, ExtRat(p)};
  }
  return open;
}

Interval IntegerPointSet::avoid(const Interval& open) const {
  if (open.empty()) throw OracleFault("avoid on empty interval");
  if (!open.lo.is_finite()) {
    if (!open.hi.is_finite()) return {ExtRat(Rat(0)), ExtRat(Rat(1))};
    Rat top{mpz_class(open.hi.finite().ceil() - 1)};
    return {ExtRat(top), open.hi};
  }
  Rat first{mpz_class(open.lo.finite().floor() + 1)};
  if (ExtRat(first) < open.hi) return {open.lo, ExtRat(first)};
  return open;
}

Interval CantorSet::avoid(const Interval& open) const {
  if (open.empty()) throw OracleFault("avoid on empty interval");
  const ExtRat zero(Rat(0)), one(Rat(1));
  if (!(zero < open.hi) || !(open.lo < one)) return open;
  if (open.lo < zero) return {open.lo, min(open.hi, zero)};
  if (one < open.hi) return {max(open.lo, one), open.hi};

  Rat left(0);
  for (unsigned depth = 0; depth < 1'000'000; ++depth) {
    const Rat third = pow3_inverse(depth + 1);
    const ExtRat gap_lo(left + third);
    const ExtRat gap_hi(left + third + third);
    Interval hit{max(open.lo, gap_lo), min(open.hi, gap_hi)};
    if (!hit.empty()) return hit;
    // The interval misses the gap, so it lies within one child.
    if (gap_lo < open.hi) left = left + third + third;
  }
  throw OracleFault("cantor avoid did not terminate for " + open.str());
}

PayoffSet::PayoffSet(std::string name, std::function<bool(const Rat&)> contains)
    : name_(std::move(name)), contains_(std::move(contains)) {}

std::optional<Rat> PayoffSet::enumerate(std::size_t n) const {
  if (!enumerate_) throw CapabilityMissing("payoff set '" + name_ + "' has no enumerator");
  return enumerate_(n);
}

CantorCore PayoffSet::cantor_core() const {
  if (!cantor_core_) throw CapabilityMissing("payoff set '" + name_ + "' has no Cantor core");
  return CantorCore{0, Rat(0)};
}

NowhereDensePtr PayoffSet::cover_piece(std::size_t n) const {
  if (!cover_) throw CapabilityMissing("payoff set '" + name_ + "' has no nowhere dense cover");
  return cover_(n);
}

const CoverFn& PayoffSet::cover() const {
  if (!cover_) throw CapabilityMissing("payoff set '" + name_ + "' has no nowhere dense cover");
  return cover_;
}

PayoffSet& PayoffSet::with_enumeration(std::string name, std::function<std::optional<Rat>(std::size_t)> fn,
                                       std::optional<std::size_t> finite_size) {
  enumeration_name_ = std::move(name);
  enumerate_ = std::move(fn);
  finite_size_ = finite_size;
  return *this;
}

PayoffSet& PayoffSet::with_cantor_core() {
  cantor_core_ = true;
  return *this;
}

PayoffSet& PayoffSet::with_cover(CoverFn cover) {
  cover_ = std::move(cover);
  return *this;
}

Rat stern_brocot_unit(std::size_t n) {
  if (n == 0) return Rat(0);
  if (n == 1) return Rat(1);
  // Node n-2 of the tree rooted at 1/2 in breadth-first order: level L holds
  // 2^L nodes; the bits of the index within the level give the path.
  std::size_t idx = n - 2;
  unsigned level = 0;
  while (idx >= (std::size_t{1} << level)) {
    idx -= std::size_t{1} << level;
    ++level;
  }
  mpz_class ln = 0, ld = 1, rn = 1, rd = 1;  // bracketing fractions
  mpz_class mn = 1, md = 2;
  for (unsigned i = level; i-- > 0;) {
    bool right = (idx >> i) & 1U;
    if (right) {
      ln = mn;
      ld = md;
    } else {
      rn = mn;
      rd = md;
    }
    mn = ln + rn;
    md = ld + rd;
  }
  return Rat(mn, md);
}

PayoffSet finite_payoff(std::vector<Rat> values) {
  std::vector<Rat> ordered;
  for (Rat& v : values) {
    if (std::find(ordered.begin(), ordered.end(), v) == ordered.end()) ordered.push_back(std::move(v));
  }
  auto shared = std::make_shared<const std::vector<Rat>>(ordered);
  auto points = std::make_shared<const FinitePointSet>(ordered);
  PayoffSet w("finite" + points->name(), [points](const Rat& x) { return points->contains(x); });
  w.with_enumeration(
      "given-order",
      [shared](std::size_t n) -> std::optional<Rat> {
        if (n < shared->size()) return (*shared)[n];
        return std::nullopt;
      },
      shared->size());
  w.with_cover([points](std::size_t n) -> NowhereDensePtr { return n == 0 ? points : nullptr; });
  return w;
}

PayoffSet rationals_payoff(const Rat& lo, const Rat& hi) {
  if (!(lo < hi)) throw std::invalid_argument("rationals payoff needs lo < hi");
  const Rat span = hi - lo;
  auto element = [lo, span](std::size_t n) { return lo + span * stern_brocot_unit(n); };
  PayoffSet w("rationals[" + lo.str() + "," + hi.str() + "]",
              [lo, hi](const Rat& x) { return !(x < lo) && !(hi < x); });
  w.with_enumeration("stern-brocot[" + lo.str() + "," + hi.str() + "]",
                     [element](std::size_t n) -> std::optional<Rat> { return element(n); }, std::nullopt);
  w.with_cover([element](std::size_t n) -> NowhereDensePtr {
    return std::make_shared<const FinitePointSet>(std::vector<Rat>{element(n)});
  });
  return w;
}

PayoffSet cantor_payoff() {
  auto set = std::make_shared<const CantorSet>();
  PayoffSet w("cantor", [](const Rat& x) { return cantor_contains(x); });
  w.with_cantor_core();
  w.with_cover([set](std::size_t n) -> NowhereDensePtr { return n == 0 ? set : nullptr; });
  return w;
}

PayoffSet union_payoff(std::vector<PayoffSet> parts) {
  if (parts.empty()) throw std::invalid_argument("union of no sets");
  std::string name = "union(";
  for (std::size_t i = 0; i < parts.size(); ++i) name += (i ? "," : "") + parts[i].name();
  name += ")";
  auto shared = std::make_shared<const std::vector<PayoffSet>>(parts);
  PayoffSet w(name, [shared](const Rat& x) {
    return std::any_of(shared->begin(), shared->end(), [&](const PayoffSet& p) { return p.contains(x); });
  });

  bool all_finite = std::all_of(parts.begin(), parts.end(),
                                [](const PayoffSet& p) { return p.can_enumerate() && p.finite_size(); });
  if (all_finite) {
    std::vector<Rat> values;
    for (const PayoffSet& p : parts) {
      for (std::size_t i = 0; i < *p.finite_size(); ++i) {
        Rat v = *p.enumerate(i);
        if (std::find(values.begin(), values.end(), v) == values.end()) values.push_back(v);
      }
    }
    auto vals = std::make_shared<const std::vector<Rat>>(std::move(values));
    w.with_enumeration(
        "concatenation",
        [vals](std::size_t n) -> std::optional<Rat> {
          if (n < vals->size()) return (*vals)[n];
          return std::nullopt;
        },
        vals->size());
  }
  if (std::any_of(parts.begin(), parts.end(), [](const PayoffSet& p) { return p.has_cantor_core(); }))
    w.with_cantor_core();
  if (std::all_of(parts.begin(), parts.end(), [](const PayoffSet& p) { return p.has_cover(); })) {
    // Interleave the covers; an exhausted part contributes an empty piece.
    w.with_cover([shared](std::size_t n) -> NowhereDensePtr {
      const std::size_t k = shared->size();
      std::size_t live = 0;
      for (const PayoffSet& p : *shared) live += p.cover_piece(n / k) ? 1 : 0;
      if (live == 0) return nullptr;
      if (auto piece = (*shared)[n % k].cover_piece(n / k)) return piece;
      return std::make_shared<const FinitePointSet>(std::vector<Rat>{});
    });
  }
  return w;
}

PayoffSet complement_in_interval(PayoffSet of, const Rat& lo, const Rat& hi) {
  if (!(lo < hi)) throw std::invalid_argument("complement interval needs lo < hi");
  std::string name = "complement(" + of.name() + ")[" + lo.str() + "," + hi.str() + "]";
  return PayoffSet(name, [of = std::move(of), lo, hi](const Rat& x) {
    return !(x < lo) && !(hi < x) && !of.contains(x);
  });
}

}  // namespace baker
