#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "baker/numeric.hpp"

namespace baker {

/// A linear order embedded in the rationals. Elements are Rat values the
/// domain accepts; the order is the rational order restricted to them.
///
/// pick_between is the canonical legal-move chooser: deterministic, strictly
/// inside the open interval, and none exactly when the domain has no element
/// there. Infinite bounds follow one convention for every domain:
/// (lo, +inf) -> least element above lo, (-inf, hi) -> greatest element below
/// hi, (-inf, +inf) -> 0. For the rationals these are lo+1, hi-1 and 0.
class OrderedDomain {
 public:
  virtual ~OrderedDomain() = default;

  virtual std::string canonical_name() const = 0;
  virtual bool dense() const = 0;
  virtual bool contains(const Rat& x) const = 0;
  virtual std::optional<Rat> pick_between(const ExtRat& lo, const ExtRat& hi) const = 0;

  int compare(const Rat& x, const Rat& y) const { return x < y ? -1 : (y < x ? 1 : 0); }
  std::optional<Rat> pick_between(const Interval& i) const { return pick_between(i.lo, i.hi); }
};

/// All of Q; finite picks are midpoints.
class RationalDomain final : public OrderedDomain {
 public:
  std::string canonical_name() const override { return "rationals"; }
  bool dense() const override { return true; }
  bool contains(const Rat&) const override { return true; }
  std::optional<Rat> pick_between(const ExtRat& lo, const ExtRat& hi) const override;
};

/// Z as a discrete order. Finite picks take the lower middle integer.
class IntegerDomain final : public OrderedDomain {
 public:
  std::string canonical_name() const override { return "integers"; }
  bool dense() const override { return false; }
  bool contains(const Rat& x) const override { return x.is_integer(); }
  std::optional<Rat> pick_between(const ExtRat& lo, const ExtRat& hi) const override;
};

/// Dyadic rationals k/2^j. Finite picks use the smallest-denominator dyadic.
class DyadicDomain final : public OrderedDomain {
 public:
  std::string canonical_name() const override { return "dyadics"; }
  bool dense() const override { return true; }
  bool contains(const Rat& x) const override;
  std::optional<Rat> pick_between(const ExtRat& lo, const ExtRat& hi) const override;
};

std::shared_ptr<const OrderedDomain> make_domain(const std::string& name);
std::vector<std::string> domain_names();

/// Smallest-denominator dyadic strictly inside (lo, hi); among equal
/// denominators the smaller numerator wins. Requires lo < hi.
Rat rational_witness(const Rat& lo, const Rat& hi);

/// rational_witness with the integer conventions for an infinite side:
/// (-inf, hi) yields the greatest integer below hi, (lo, +inf) the least
/// integer above lo.
Rat rational_witness(const ExtRat& lo, const ExtRat& hi);

}  // namespace baker
