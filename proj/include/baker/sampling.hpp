#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "baker/domain.hpp"

namespace baker {

enum class Bias : std::uint8_t { Uniform, High, Low };

/// Random element of the domain strictly inside (lo, hi), or nullopt when the
/// domain has none there. An infinite side is replaced by a random finite
/// bound 1..10 away; a fully unbounded region by (-1, 2). Dense domains draw a
/// short random sub-interval on a 2^16 grid and return its simplest dyadic,
/// which keeps denominators small.
std::optional<Rat> random_between(std::mt19937_64& rng, const ExtRat& lo, const ExtRat& hi,
                                  const OrderedDomain& domain, Bias bias = Bias::Uniform);

/// splitmix64 finalizer, for deriving independent stream seeds.
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b);

}  // namespace baker
