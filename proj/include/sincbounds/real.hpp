#pragma once

#include <cmath>
#include <concepts>
#include <type_traits>

#include "sincbounds/dd.hpp"

namespace sincb {

// Real types the formula templates are instantiated with.
template <class R>
concept Real = std::same_as<R, double> || std::same_as<R, dd>;

template <class R>
struct real_traits;

template <>
struct real_traits<double> {
  static constexpr double pi() { return 3.141592653589793; }
  // Spacing of doubles near |x|.
  static double ulp(double x) {
    const double ax = std::abs(x);
    return std::nextafter(ax, HUGE_VAL) - ax;
  }
  static constexpr const char* name = "native";
};

template <>
struct real_traits<dd> {
  static constexpr dd pi() { return dd_const::pi; }
  static dd ulp(dd x) { return dd(std::ldexp(std::abs(x.hi()), -105)); }
  static constexpr const char* name = "extended";
};

template <Real R>
inline double to_double(R x) {
  return static_cast<double>(x);
}

}  // namespace sincb
