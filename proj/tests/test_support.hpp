#pragma once

#include <doctest.h>

#include "baker/numeric.hpp"

namespace doctest {
template <>
struct StringMaker<baker::Rat> {
  static String convert(const baker::Rat& r) { return r.str().c_str(); }
};
template <>
struct StringMaker<baker::ExtRat> {
  static String convert(const baker::ExtRat& r) { return r.str().c_str(); }
};
}  // namespace doctest
