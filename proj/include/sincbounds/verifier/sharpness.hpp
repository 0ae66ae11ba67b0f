#pragma once

// Grid evidence that the multiplicative constants cannot be improved.

#include <cmath>
#include <numbers>

#include "sincbounds/bounds.hpp"
#include "sincbounds/verifier/grid.hpp"

namespace sincb::verifier {

struct GridMax {
  double value = 0.0;
  double arg = 0.0;
};

// max over the circular grid of (sin t/t) / H1(cos t, p); equals delta_p for
// p in (p1, p0] once the grid resolves the peak at t0(p).
inline GridMax sinc_over_h1_max(double p, int points) {
  const ExtendedParam ep(p);
  GridSpec spec;
  spec.points = points;
  GridMax best{-HUGE_VAL, 0.0};
  for (double t : make_grid(DomainKind::circular, spec)) {
    const double r = raw::sinc(t) / raw::h1(std::cos(t), ep);
    if (r > best.value) best = {r, t};
  }
  return best;
}

// |H2(cos t, p) - sin t/t| at t = pi/2 - gap: the lambda_p bound touches the
// function at the right end point.
inline double h2_endpoint_gap(const ExtendedParam& p, double gap = 1e-6) {
  const double t = std::numbers::pi / 2 - gap;
  return std::abs(raw::h2(std::cos(t), p) - raw::sinc(t));
}

}  // namespace sincb::verifier
