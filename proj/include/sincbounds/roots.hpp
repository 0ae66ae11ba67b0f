#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace sincb {

// Raised when the end points of a bracket do not straddle a sign change, or
// the solver cannot meet its tolerances.
class bracket_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RootResult {
  double value = 0.0;
  double residual = 0.0;  // f(value)
  int iterations = 0;
  double lo = 0.0;  // final bracket
  double hi = 0.0;
};

struct RootOptions {
  double width_tolerance = 1e-13;
  double residual_tolerance = 1e-10;
  int max_iterations = 200;
  bool secant_acceleration = true;
};

// Bracketed root of a continuous f on [lo, hi] with f(lo) f(hi) <= 0.
//
// Bisection, with every other step replaced by a secant step when the secant
// point falls strictly inside the current bracket. The bracket always keeps a
// sign change, and its width at least halves every two iterations.
template <class F>
RootResult find_root(F&& f, double lo, double hi, const RootOptions& opt = {}) {
  if (!(lo < hi)) throw bracket_error("find_root: empty bracket");
  double flo = f(lo);
  double fhi = f(hi);
  if (std::isnan(flo) || std::isnan(fhi)) throw bracket_error("find_root: NaN at bracket end");
  if (flo == 0.0) return {lo, 0.0, 0, lo, lo};
  if (fhi == 0.0) return {hi, 0.0, 0, hi, hi};
  if ((flo > 0.0) == (fhi > 0.0)) {
    throw bracket_error("find_root: no sign change on [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }

  int it = 0;
  while (hi - lo > opt.width_tolerance && it < opt.max_iterations) {
    ++it;
    const double mid = lo + 0.5 * (hi - lo);
    double x = mid;
    if (opt.secant_acceleration && (it % 2 == 1)) {
      const double s = lo - flo * (hi - lo) / (fhi - flo);
      if (s > lo && s < hi) x = s;
    }
    if (x <= lo || x >= hi) break;  // bracket at floating-point resolution
    const double fx = f(x);
    if (fx == 0.0) return {x, 0.0, it, x, x};
    if ((fx > 0.0) == (flo > 0.0)) {
      lo = x;
      flo = fx;
    } else {
      hi = x;
      fhi = fx;
    }
  }

  RootResult r;
  r.iterations = it;
  r.lo = lo;
  r.hi = hi;
  if (std::abs(flo) <= std::abs(fhi)) {
    r.value = lo;
    r.residual = flo;
  } else {
    r.value = hi;
    r.residual = fhi;
  }
  if (hi - lo > opt.width_tolerance && it >= opt.max_iterations) {
    throw bracket_error("find_root: iteration limit reached");
  }
  if (std::abs(r.residual) > opt.residual_tolerance) {
    throw bracket_error("find_root: residual " + std::to_string(r.residual) + " above tolerance");
  }
  return r;
}

}  // namespace sincb
