#pragma once

// Closed-form evaluators for the rational bound families and the auxiliary
// polynomials that govern their sign structure.
//
// Two layers:
//   sincb::raw    templates over Real (double or dd), no argument checks.
//                 The verifier runs these in both precisions and also just
//                 outside the admissible parameter set.
//   sincb::       checked double API on strong argument types.

#include <cmath>
#include <numbers>

#include "sincbounds/extended_param.hpp"
#include "sincbounds/real.hpp"

namespace sincb {

namespace raw {

using std::cbrt;
using std::cos;
using std::cosh;
using std::log;
using std::sin;
using std::sinh;
using std::sqrt;

template <Real R>
R pi() {
  return real_traits<R>::pi();
}

// sin(t)/t; below 1e-6 the truncated series is exact to rounding.
template <Real R>
R sinc(R t) {
  if (std::abs(to_double(t)) < 1e-6) {
    const R t2 = t * t;
    return R(1.0) - t2 / R(6.0) + t2 * t2 / R(120.0);
  }
  return sin(t) / t;
}

template <Real R>
R sinhc(R t) {
  if (std::abs(to_double(t)) < 1e-6) {
    const R t2 = t * t;
    return R(1.0) + t2 / R(6.0) + t2 * t2 / R(120.0);
  }
  return sinh(t) / t;
}

template <Real R>
R h1(R x, const ExtendedParam& p) {
  if (p.is_infinite()) return (R(2.0) + x) / R(3.0);
  const R q(p.value());
  return (R(2.0) * q + (q + R(3.0)) * x) / (R(3.0) * q + R(1.0) + R(2.0) * x);
}

template <Real R>
R lambda(const ExtendedParam& p) {
  if (p.is_infinite()) return R(3.0) / pi<R>();
  const R q(p.value());
  return (R(3.0) * q + R(1.0)) / (pi<R>() * q);
}

template <Real R>
R h2(R x, const ExtendedParam& p) {
  if (p.is_infinite()) return (R(2.0) + x) / pi<R>();
  return lambda<R>(p) * h1(x, p);
}

// Reciprocal-parameter family used for sinh(t)/t; x is cosh t > 1.
template <Real R>
R h5(R x, const ExtendedParam& p) {
  if (p.is_infinite()) return R(3.0) * x / (R(2.0) * x + R(1.0));
  const R q(p.value());
  return (R(2.0) + (R(1.0) + R(3.0) * q) * x) / (R(3.0) + q + R(2.0) * q * x);
}

template <Real R>
R sigma(const ExtendedParam& p) {
  const R s2 = sqrt(R(2.0));
  if (p.is_infinite()) return R(12.0) / ((R(2.0) * s2 + R(1.0)) * pi<R>());
  const R q(p.value());
  return R(4.0) / pi<R>() * (R(3.0) * q + s2 + R(1.0)) / ((R(2.0) * s2 + R(1.0)) * q + R(3.0));
}

template <Real R>
R u1(R x, double p) {
  const R q(p);
  return (R(2.0) * q + (R(3.0) + q) * x) * (R(3.0) * q + R(1.0) + R(2.0) * x);
}

template <Real R>
R u2(R x, double p) {
  const R q(p);
  const R x2 = x * x;
  return R(2.0) * (q + R(3.0)) * x2 * x + R(8.0) * q * x2 +
         R(2.0) * q * (R(3.0) * q + R(1.0)) * x + R(3.0) * (q + R(1.0)) * (q + R(1.0));
}

template <Real R>
R u3(R x, double p) {
  const R q(p);
  const R a = q + R(3.0);
  return a * a * x * x + a * (R(7.0) * q + R(3.0)) * x +
         (((R(-3.0) * q + R(13.0)) * q + R(21.0)) * q + R(9.0));
}

template <Real R>
R u4(R x, double p) {
  const R q(p);
  return R(2.0) * x * x + (R(1.0) - q) * x - R(2.0) * q;
}

// u2/u1, with the p -> +-inf limit (2x+1)/(x+2).
template <Real R>
R u_ratio(R x, const ExtendedParam& p) {
  if (p.is_infinite()) return (R(2.0) * x + R(1.0)) / (x + R(2.0));
  // both polynomials carry a factor (1 - x)^2 here and the quotient is x
  if (p.value() == -1.0) return x;
  return u2(x, p.value()) / u1(x, p.value());
}

template <Real R>
R g(R t, const ExtendedParam& p) {
  return t - sin(t) / u_ratio(cos(t), p);
}

template <Real R>
R f(R t, const ExtendedParam& p) {
  return log(sinc(t)) - log(h1(cos(t), p));
}

template <Real R>
R df_dt(R t, const ExtendedParam& p) {
  return u_ratio(cos(t), p) * g(t, p) / (t * sin(t));
}

// Half-angle member H1(cos(t/2), p) cos(t/2).
template <Real R>
R half_angle(R t, const ExtendedParam& p) {
  const R c = cos(t / R(2.0));
  return h1(c, p) * c;
}

template <Real R>
R big_f(R t, double p) {
  const R q(p);
  const R x = cosh(t);
  return (R(3.0) + q + R(2.0) * q * x) / (R(2.0) + (R(1.0) + R(3.0) * q) * x) * sinh(t) - t;
}

template <Real R>
R dbig_f_dt(R t, double p) {
  const R q(p);
  const R x = cosh(t);
  const R xm1 = x - R(1.0);
  const R den = x + R(3.0) * q * x + R(2.0);
  return xm1 * xm1 * (R(2.0) * q * (R(3.0) * q + R(1.0)) * x + (R(3.0) * q * q + R(6.0) * q - R(1.0))) /
         (den * den);
}

}  // namespace raw

// Free abscissa in (0,1); for the circular families x = cos t.
class Abscissa {
 public:
  explicit Abscissa(double x) : x_(x) {
    if (!(x > 0.0 && x < 1.0)) throw domain_error("abscissa must lie in (0,1)");
  }
  double value() const { return x_; }

 private:
  double x_;
};

class CircularArg {
 public:
  explicit CircularArg(double t) : t_(t) {
    if (!(t > 0.0 && t < std::numbers::pi / 2)) throw domain_error("t must lie in (0, pi/2)");
  }
  double value() const { return t_; }

 private:
  double t_;
};

class HyperbolicArg {
 public:
  explicit HyperbolicArg(double t) : t_(t) {
    if (!(t > 0.0 && std::isfinite(t))) throw domain_error("t must be positive and finite");
  }
  double value() const { return t_; }

 private:
  double t_;
};

namespace kernel_detail {

inline void require_finite(const ExtendedParam& p, const char* what) {
  if (p.is_infinite()) throw domain_error(std::string(what) + " requires a finite parameter");
}

inline void require_nonzero(const ExtendedParam& p, const char* what) {
  if (p.is_finite() && p.value() == 0.0) throw domain_error(std::string(what) + " is undefined at p = 0");
}

}  // namespace kernel_detail

inline double h1(Abscissa x, const ExtendedParam& p) { return raw::h1(x.value(), p); }

inline double h2(Abscissa x, const ExtendedParam& p) {
  kernel_detail::require_nonzero(p, "h2");
  return raw::h2(x.value(), p);
}

inline double h5(double x, const ExtendedParam& p) {
  if (!(x > 1.0)) throw domain_error("h5 requires x > 1");
  return raw::h5(x, p);
}

inline double u1(Abscissa x, const ExtendedParam& p) {
  kernel_detail::require_finite(p, "u1");
  return raw::u1(x.value(), p.value());
}

inline double u2(Abscissa x, const ExtendedParam& p) {
  kernel_detail::require_finite(p, "u2");
  return raw::u2(x.value(), p.value());
}

inline double u3(Abscissa x, const ExtendedParam& p) {
  kernel_detail::require_finite(p, "u3");
  return raw::u3(x.value(), p.value());
}

// Defined for every finite p, not only the admissible set.
inline double u4(Abscissa x, double p) {
  if (!std::isfinite(p)) throw domain_error("u4 requires a finite parameter");
  return raw::u4(x.value(), p);
}

inline double g(CircularArg t, const ExtendedParam& p) {
  kernel_detail::require_finite(p, "g");
  return raw::g(t.value(), p);
}

inline double f(CircularArg t, const ExtendedParam& p) {
  if (!(raw::h1(std::cos(t.value()), p) > 0.0)) throw domain_error("f: H1(cos t, p) is not positive");
  return raw::f(t.value(), p);
}

inline double df_dt(CircularArg t, const ExtendedParam& p) {
  if (!(raw::h1(std::cos(t.value()), p) > 0.0)) throw domain_error("df_dt: H1(cos t, p) is not positive");
  return raw::df_dt(t.value(), p);
}

inline void check_big_f_args(double t, double p) {
  if (!(p >= -1.0) || !std::isfinite(p)) throw domain_error("F requires finite p >= -1");
  if ((2.0 + (1.0 + 3.0 * p) * std::cosh(t)) == 0.0) throw domain_error("F: denominator vanishes");
}

inline double big_f(HyperbolicArg t, double p) {
  check_big_f_args(t.value(), p);
  return raw::big_f(t.value(), p);
}

inline double dbig_f_dt(HyperbolicArg t, double p) {
  check_big_f_args(t.value(), p);
  return raw::dbig_f_dt(t.value(), p);
}

inline double lambda_const(const ExtendedParam& p) {
  kernel_detail::require_nonzero(p, "lambda");
  return raw::lambda<double>(p);
}

inline double sigma_const(const ExtendedParam& p) { return raw::sigma<double>(p); }

inline double sinc(double t) { return raw::sinc(t); }
inline double sinhc(double t) { return raw::sinhc(t); }

}  // namespace sincb
