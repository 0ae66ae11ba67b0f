#pragma once

// Enclosures of sin(t)/t on (0, pi/2) and sinh(t)/t on (0, inf) built from the
// H1/H2/H5 families, with the regime logic that says which side each member
// bounds.

#include <array>
#include <cmath>
#include <string_view>

#include "sincbounds/constants.hpp"
#include "sincbounds/enclosure.hpp"
#include "sincbounds/kernel.hpp"

namespace sincb {

enum class Regime {
  upper_h1,               // p <= -1 or p >= 9: sin t/t < H1
  lower_h1_sharp_lambda,  // 0 <= p <= p1: H1 < sin t/t < lambda_p H1
  lower_h1_sharp_delta,   // p1 < p <= p0: H1 < sin t/t <= delta_p H1
  no_global_bound,        // p0 < p < 9: neither direction holds on all of (0, pi/2)
};

constexpr std::string_view to_string(Regime r) {
  switch (r) {
    case Regime::upper_h1: return "UPPER_H1";
    case Regime::lower_h1_sharp_lambda: return "LOWER_H1_SHARP_LAMBDA";
    case Regime::lower_h1_sharp_delta: return "LOWER_H1_SHARP_DELTA";
    case Regime::no_global_bound: return "NO_GLOBAL_BOUND";
  }
  return "?";
}

inline Regime classify(const ExtendedParam& p) {
  if (p.is_infinite()) return Regime::upper_h1;
  const double v = p.value();
  const auto& k = SharpConstants::get();
  if (v <= -1.0 || v >= 9.0) return Regime::upper_h1;
  if (v >= 0.0 && v <= k.p1) return Regime::lower_h1_sharp_lambda;
  if (v > k.p1 && v <= k.p0) return Regime::lower_h1_sharp_delta;
  return Regime::no_global_bound;
}

namespace raw {

// Ordered members of the cube-root interpolation chain:
// H1(c,0) < c^(1/3) < H1(c,q) < sin t/t < H1(c,r) < (2+c)/3 < H1(c,s).
template <Real R>
std::array<R, 7> mc_chain(R t, double q, const ExtendedParam& r, const ExtendedParam& s) {
  const R c = cos(t);
  return {h1(c, ExtendedParam(0.0)), cbrt(c), h1(c, ExtendedParam(q)), sinc(t), h1(c, r),
          (R(2.0) + c) / R(3.0), h1(c, s)};
}

// Chains in display order, constants from sigma_p.
template <Real R>
std::array<R, 5> me_chain(R t, int which) {
  const R c = cos(t);
  ExtendedParam p = ExtendedParam::plus_infinity();
  if (which == 1) p = ExtendedParam(9.0);
  if (which == 3) p = ExtendedParam(1.0);
  const R x = half_angle(t, p);
  const R s = sigma<R>(p);
  if (which == 3) return {h1(c, p), x, sinc(t), s * x, h2(c, p)};
  return {h2(c, p), s * x, sinc(t), x, h1(c, p)};
}

}  // namespace raw

inline Enclosure sinc_enclosure_ma(CircularArg t, const ExtendedParam& p) {
  if (classify(p) != Regime::upper_h1) throw regime_error("MA family needs p in (-inf,-1] U [9,inf]");
  const double c = std::cos(t.value());
  return {raw::h2(c, p), raw::h1(c, p), true, true, Family::ma, p, {}};
}

inline Enclosure sinc_enclosure_mb(CircularArg t, double p) {
  const auto& k = SharpConstants::get();
  if (!(p >= 0.0 && p <= k.p0)) throw regime_error("MB family needs p in [0, p0]");
  const ExtendedParam ep(p);
  const double c = std::cos(t.value());
  const double lower = raw::h1(c, ep);
  if (p == 0.0) {
    // lambda_0 is undefined; Jordan's upper bound keeps the enclosure total.
    return {lower, 1.0, true, true, Family::mb_lambda, ep, {}};
  }
  if (p <= k.p1) return {lower, raw::h2(c, ep), true, true, Family::mb_lambda, ep, {}};
  // Equality is attained at t = t0(p).
  return {lower, compute_delta(p) * lower, true, false, Family::mb_delta, ep, {}};
}

inline std::array<double, 7> sinc_chain_mc(CircularArg t, double q, const ExtendedParam& r,
                                           const ExtendedParam& s) {
  const auto& k = SharpConstants::get();
  if (!(q >= 1.0 && q <= k.p0)) throw regime_error("chain needs q in [1, p0]");
  if (!(r.is_infinite() ? r.value() > 0 : r.value() >= 9.0)) throw regime_error("chain needs r >= 9");
  if (!(s.is_infinite() ? s.value() < 0 : s.value() <= -1.0)) throw regime_error("chain needs s <= -1");
  return raw::mc_chain(t.value(), q, r, s);
}

inline bool md_direct(const ExtendedParam& p) { return classify(p) == Regime::upper_h1; }

inline bool md_reversed(const ExtendedParam& p) {
  return p.is_finite() && p.value() >= 0.0 && p.value() <= SharpConstants::get().p1;
}

inline Enclosure sinc_enclosure_md(CircularArg t, const ExtendedParam& p) {
  const double x = raw::half_angle(t.value(), p);
  const double s = raw::sigma<double>(p);
  if (md_direct(p)) return {s * x, x, true, true, Family::md, p, {}};
  if (md_reversed(p)) return {x, s * x, true, true, Family::md, p, {}};
  throw regime_error("MD family needs p in (-inf,-1] U [0,p1] U [9,inf]");
}

enum class MeChain { me1 = 1, me2 = 2, me3 = 3 };

inline std::array<double, 5> sinc_chains_me(CircularArg t, MeChain which) {
  return raw::me_chain(t.value(), static_cast<int>(which));
}

inline bool mf_lower_param(const ExtendedParam& p) { return classify(p) == Regime::upper_h1; }

inline Enclosure sinc_enclosure_mf(CircularArg t, const ExtendedParam& p, double q) {
  if (!mf_lower_param(p)) throw regime_error("MF lower member needs p in (-inf,-1] U [9,inf]");
  if (!(q >= 0.0 && q <= SharpConstants::get().p1)) throw regime_error("MF upper member needs q in [0, p1]");
  const double c = std::cos(t.value());
  const ExtendedParam eq(q);
  return {raw::u_ratio(c, p), raw::u_ratio(c, eq), true, true, Family::mf, p, eq};
}

inline OneSidedBound sinhc_bound_mg(HyperbolicArg t, const ExtendedParam& p) {
  const double x = std::cosh(t.value());
  if (p.is_infinite() || p.value() <= -1.0 || p.value() >= 1.0 / 9.0) {
    return {raw::h5(x, p), Side::lower, Family::mg, p};
  }
  if (p.value() == 0.0) return {(2.0 + x) / 3.0, Side::upper, Family::mg, p};
  throw regime_error("MG family needs p in (-inf,-1] U {0} U [1/9,inf]");
}

}  // namespace sincb
