#pragma once

// Sine integral Si(x) = int_0^x sin(t)/t dt: a two-sided elementary estimate
// on (0, pi/2] and a Maclaurin-series reference value.

#include <cmath>
#include <numbers>

#include "sincbounds/enclosure.hpp"
#include "sincbounds/kernel.hpp"

namespace sincb {

class SiArg {
 public:
  explicit SiArg(double x) : x_(x) {
    if (!(x > 0.0 && x <= std::numbers::pi / 2)) throw domain_error("Si estimate needs x in (0, pi/2]");
  }
  double value() const { return x_; }

 private:
  double x_;
};

namespace raw {

// x + sin x + 8 sin(x/2), the common factor of both members.
template <Real R>
R si_core(R x) {
  return x + sin(x) + R(8.0) * sin(x / R(2.0));
}

template <Real R>
R si_lower_factor() {
  return (R(4.0) * sqrt(R(2.0)) - R(2.0)) / (R(7.0) * pi<R>());
}

template <Real R>
R si_upper_factor() {
  return R(1.0) / R(6.0);
}

// Sum_k (-1)^k x^(2k+1) / ((2k+1)(2k+1)!), stopped once a term drops below
// 1e-17 of the partial sum (a tighter cut in extended precision).
template <Real R>
R si_series(R x) {
  const double cut = std::is_same_v<R, double> ? 1e-17 : 1e-33;
  const R x2 = x * x;
  R term = x;  // x^(2k+1) / (2k+1)!, signed
  R sum = x;
  for (int k = 1; k < 200; ++k) {
    const double n = 2.0 * k;
    term = -term * x2 / R(n * (n + 1.0));
    const R add = term / R(n + 1.0);
    sum += add;
    if (std::abs(to_double(add)) <= cut * std::abs(to_double(sum))) break;
  }
  return sum;
}

}  // namespace raw

inline Enclosure si_enclosure(SiArg x) {
  const double core = raw::si_core(x.value());
  return {raw::si_lower_factor<double>() * core, raw::si_upper_factor<double>() * core, true, true, Family::si,
          {}, {}};
}

inline double si_reference(double x) {
  if (!(x >= 0.0 && x <= 10.0)) throw domain_error("si_reference valid on [0, 10]");
  if (x == 0.0) return 0.0;
  return raw::si_series(x);
}

}  // namespace sincb
