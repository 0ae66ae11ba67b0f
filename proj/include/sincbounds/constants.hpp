#pragma once

// Sharp constants and regime thresholds of the H1/H2 families.
//
//   p3  root of u3(0,p) = -3p^3 + 13p^2 + 21p + 9; u3(.,p) >= 0 on (0,1) iff p <= p3
//   p1  larger root of g(pi/2-, p) = 0; g(.,p) > 0 on (0,pi/2) iff p in [0,p1]
//   p2  the other (negative) root of the same quadratic; drives no bound
//   p0  1/(pi-3), where lambda_p = 1; H1(cos t,p) < sin t/t iff p in [0,p0]
//
// and, for p between the thresholds, the crossing points x1(p) of u3, t0(p)
// of g, and the best constant delta_p = exp f(t0(p), p).

#include <cmath>
#include <numbers>

#include "sincbounds/kernel.hpp"
#include "sincbounds/roots.hpp"

namespace sincb {

inline double compute_p0() { return 1.0 / (std::numbers::pi - 3.0); }

inline double compute_p1() {
  constexpr double pi = std::numbers::pi;
  return (2.0 * std::sqrt(6.0 * pi + 1.0) + 3.0 * pi - 2.0) / (12.0 - 3.0 * pi);
}

inline double compute_p2() {
  constexpr double pi = std::numbers::pi;
  return (3.0 * pi - 2.0 - 2.0 * std::sqrt(6.0 * pi + 1.0)) / (12.0 - 3.0 * pi);
}

// -3p^3 + 13p^2 + 21p + 9
inline double u3_at_zero(double p) { return ((-3.0 * p + 13.0) * p + 21.0) * p + 9.0; }

// Factored value of g(pi/2-, p) for p != -1.
inline double g_at_half_pi(double p) {
  constexpr double pi = std::numbers::pi;
  return -(12.0 - 3.0 * pi) / (6.0 * (p + 1.0) * (p + 1.0)) * (p - compute_p1()) * (p - compute_p2());
}

inline RootResult compute_p3(const RootOptions& opt = {}) {
  // u3(0,.) increases up to its local maximum at (13+sqrt(358))/9 and then
  // decreases to -inf; the root lies to the right of the maximum.
  const double lo = (13.0 + std::sqrt(358.0)) / 9.0;
  return find_root(u3_at_zero, lo, 16.0, opt);
}

namespace constants_detail {

inline double p3_value() {
  static const double p3 = compute_p3().value;
  return p3;
}

}  // namespace constants_detail

inline RootResult compute_x1(double p, const RootOptions& opt = {}) {
  if (!(p > constants_detail::p3_value() && p < 9.0)) throw domain_error("x1(p) requires p in (p3, 9)");
  return find_root([p](double x) { return raw::u3(x, p); }, 0.0, 1.0, opt);
}

inline RootResult compute_t0(double p, const RootOptions& opt = {}) {
  if (!(p > compute_p1() && p < 9.0)) throw domain_error("t0(p) requires p in (p1, 9)");
  const ExtendedParam param(p);
  auto gp = [&param](double t) { return raw::g(t, param); };
  const double lo = std::acos(compute_x1(p).value);
  double hi = std::numbers::pi / 2 - 1e-9;
  if (gp(hi) > 0.0) hi = std::numbers::pi / 2;  // p within ~1e-9 of p1
  return find_root(gp, lo, hi, opt);
}

// delta_p as exp f(t0, p).
inline double compute_delta(double p) {
  if (!(p > compute_p1() && p <= compute_p0())) throw domain_error("delta_p requires p in (p1, p0]");
  const double t0 = compute_t0(p).value;
  return std::exp(raw::f(t0, ExtendedParam(p)));
}

// delta_p as the displayed quotient (sin t0/t0)((3p+1)+2cos t0)/(2p+(p+3)cos t0).
inline double compute_delta_quotient(double p) {
  if (!(p > compute_p1() && p <= compute_p0())) throw domain_error("delta_p requires p in (p1, p0]");
  const double t0 = compute_t0(p).value;
  const double c = std::cos(t0);
  return std::sin(t0) / t0 * ((3.0 * p + 1.0) + 2.0 * c) / (2.0 * p + (p + 3.0) * c);
}

struct SharpConstants {
  double p0;
  double p1;
  double p2;
  double p3;

  static const SharpConstants& get() {
    static const SharpConstants k{compute_p0(), compute_p1(), compute_p2(), compute_p3().value};
    return k;
  }

  RootResult t0(double p) const { return compute_t0(p); }
  RootResult x1(double p) const { return compute_x1(p); }
  double delta(double p) const { return compute_delta(p); }
};

}  // namespace sincb
