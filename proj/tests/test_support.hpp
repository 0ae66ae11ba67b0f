#pragma once

#include <gtest/gtest.h>

#include <cmath>

#include "oracle_values.hpp"
#include "sincbounds/dd.hpp"

namespace testing_support {

// Relative distance of a double-double from an exact reference pair.
inline double rel_error(sincb::dd x, oracle::Pair ref) {
  const sincb::dd diff = (x - sincb::dd(ref.hi)) - sincb::dd(ref.lo);
  return std::abs(diff.hi()) / std::abs(ref.hi);
}

inline ::testing::AssertionResult rel_near(double got, double want, double tol) {
  const double scale = std::max(std::abs(want), 1e-300);
  const double rel = std::abs(got - want) / scale;
  if (rel <= tol) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << "got " << got << ", want " << want << " (relative error " << rel
                                       << " > " << tol << ")";
}

}  // namespace testing_support
