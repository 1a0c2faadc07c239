#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "baker/numeric.hpp"

namespace baker {

class CapabilityMissing : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class NoRefinement : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class OracleFault : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Middle-thirds Cantor set

/// Exact membership for rationals via the eventually periodic ternary
/// expansion. Cost grows with the multiplicative order of 3 modulo the
/// 3-free part of the denominator.
bool cantor_contains(const Rat& x);

/// Whether the open interval meets the Cantor set. Decided by descending the
/// construction tree; independent of cantor_contains and of the gap finder.
bool cantor_meets(const Interval& open);

/// A construction interval [left, left + 3^-depth] of the middle-thirds set.
struct CantorCore {
  unsigned depth = 0;
  Rat left{0};

  Rat right() const { return left + pow3_inverse(depth); }
  friend bool operator==(const CantorCore&, const CantorCore&) = default;
};

/// left * 3^depth is an integer whose depth ternary digits are all 0 or 2.
bool is_construction_interval(const CantorCore& core);

/// Breadth-first by depth, left to right: the first construction interval
/// strictly deeper than `core`, nested in it, whose closure sits inside the
/// open `bounds` (so its left end exceeds bounds.lo). Throws NoRefinement
/// when nothing fits within `max_extra_depth` levels past the first depth
/// whose intervals are narrow enough.
CantorCore cantor_refine(const CantorCore& core, const Interval& bounds, unsigned max_extra_depth = 256);

// ---------------------------------------------------------------------------
// Nowhere dense sets

class NowhereDenseSet {
 public:
  virtual ~NowhereDenseSet() = default;
  virtual std::string name() const = 0;
  virtual bool contains(const Rat& x) const = 0;
  /// Nonempty open sub-interval of `open` disjoint from the set.
  virtual Interval avoid(const Interval& open) const = 0;
};

class FinitePointSet final : public NowhereDenseSet {
 public:
  explicit FinitePointSet(std::vector<Rat> points);
  std::string name() const override;
  bool contains(const Rat& x) const override;
  /// Dodges to the left of the least point inside the interval.
  Interval avoid(const Interval& open) const override;

 private:
  std::vector<Rat> points_;  // sorted, unique
};

class IntegerPointSet final : public NowhereDenseSet {
 public:
  std::string name() const override { return "integers"; }
  bool contains(const Rat& x) const override { return x.is_integer(); }
  Interval avoid(const Interval& open) const override;
};

class CantorSet final : public NowhereDenseSet {
 public:
  std::string name() const override { return "cantor"; }
  bool contains(const Rat& x) const override { return cantor_contains(x); }
  /// Part of the interval outside [0,1] if any, else the intersection with
  /// the first removed middle third (by depth) that the interval meets.
  Interval avoid(const Interval& open) const override;
};

using NowhereDensePtr = std::shared_ptr<const NowhereDenseSet>;

/// A countable cover F_0, F_1, ... by nowhere dense sets; nullptr past the end.
using CoverFn = std::function<NowhereDensePtr(std::size_t)>;

// ---------------------------------------------------------------------------
// Payoff sets

/// Payoff set W with advertised capabilities. Only `contains` is mandatory.
class PayoffSet {
 public:
  PayoffSet(std::string name, std::function<bool(const Rat&)> contains);

  const std::string& name() const { return name_; }
  bool contains(const Rat& x) const { return contains_(x); }

  bool can_enumerate() const { return static_cast<bool>(enumerate_); }
  /// n-th element without repetition; nullopt past the end of a finite set.
  /// Throws CapabilityMissing when W has no enumerator.
  std::optional<Rat> enumerate(std::size_t n) const;
  /// Name of the enumeration used for w_n indexing.
  const std::string& enumeration_name() const { return enumeration_name_; }
  std::optional<std::size_t> finite_size() const { return finite_size_; }

  bool has_cantor_core() const { return cantor_core_; }
  /// Root core [0,1]; throws CapabilityMissing.
  CantorCore cantor_core() const;

  bool has_cover() const { return static_cast<bool>(cover_); }
  NowhereDensePtr cover_piece(std::size_t n) const;
  const CoverFn& cover() const;

  PayoffSet& with_enumeration(std::string name, std::function<std::optional<Rat>(std::size_t)> fn,
                              std::optional<std::size_t> finite_size);
  PayoffSet& with_cantor_core();
  PayoffSet& with_cover(CoverFn cover);

 private:
  std::string name_;
  std::function<bool(const Rat&)> contains_;
  std::function<std::optional<Rat>(std::size_t)> enumerate_;
  std::string enumeration_name_;
  std::optional<std::size_t> finite_size_;
  bool cantor_core_ = false;
  CoverFn cover_;
};

/// Breadth-first Stern-Brocot order of Q in [0,1]: 0, 1, 1/2, 1/3, 2/3,
/// 1/4, 2/5, 3/5, 3/4, ...
Rat stern_brocot_unit(std::size_t n);

PayoffSet finite_payoff(std::vector<Rat> values);
/// Q in [lo, hi], enumerated by the unit Stern-Brocot order mapped affinely.
PayoffSet rationals_payoff(const Rat& lo, const Rat& hi);
PayoffSet cantor_payoff();
PayoffSet union_payoff(std::vector<PayoffSet> parts);
PayoffSet complement_in_interval(PayoffSet of, const Rat& lo, const Rat& hi);

}  // namespace baker
