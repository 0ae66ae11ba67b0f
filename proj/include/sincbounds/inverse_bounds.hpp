#pragma once

// Shafer-Fink type enclosures of arcsin x on (0,1), obtained from the sinc
// enclosures through x = sin t.

#include <array>
#include <cmath>

#include "sincbounds/bounds.hpp"

namespace sincb {

class UnitArg {
 public:
  explicit UnitArg(double x) : x_(x) {
    if (!(x > 0.0 && x < 1.0)) throw domain_error("x must lie in (0,1)");
  }
  double value() const { return x_; }

 private:
  double x_;
};

namespace raw {

using std::asin;

// sqrt(1 - x^2) without the cancellation near x = 1.
template <Real R>
R cos_of_asin(R x) {
  return sqrt((R(1.0) - x) * (R(1.0) + x));
}

// sqrt(1+x) - sqrt(1-x) and sqrt(1+x) + sqrt(1-x).
template <Real R>
std::array<R, 2> root_pair(R x) {
  const R sp = sqrt(R(1.0) + x);
  const R sm = sqrt(R(1.0) - x);
  const R sum = sp + sm;
  return {R(2.0) * x / sum, sum};
}

// x / H1(sqrt(1-x^2), p)
template <Real R>
R arcsin_h1_member(R x, const ExtendedParam& p) {
  return x / h1(cos_of_asin(x), p);
}

// x / H2(sqrt(1-x^2), p)
template <Real R>
R arcsin_h2_member(R x, const ExtendedParam& p) {
  return x / h2(cos_of_asin(x), p);
}

// ((3p+1)(s+ - s-) + 2x) / (4p + (p+3)(s+ + s-)), s+- = sqrt(1 +- x).
// Twice this is x / (H1(cos(t/2),p) cos(t/2)) with x = sin t.
// Rewritten through e = s+ + s- - 2 (computed without cancellation) so that
// p near -1, where numerator and denominator both vanish like x^2, stays
// accurate.
template <Real R>
R half_angle_core(R x, const ExtendedParam& p) {
  const R sp = sqrt(R(1.0) + x);
  const R sm = sqrt(R(1.0) - x);
  const R sum = sp + sm;
  const R diff = R(2.0) * x / sum;
  const R e = -x * diff / ((sp + R(1.0)) * (sm + R(1.0)));
  if (p.is_infinite()) return R(6.0) * x / (sum * (R(6.0) + e));
  const R q(p.value());
  const R k = R(3.0) * (q + R(1.0));
  return R(2.0) * x * (k + e) / (sum * (R(2.0) * k + (q + R(3.0)) * e));
}

template <Real R>
R arcsin_mf_member(R x, const ExtendedParam& p) {
  return x / u_ratio(cos_of_asin(x), p);
}

// Display-order chains. P31 takes its inner constant from sigma_9.
template <Real R>
std::array<R, 5> arcsin_chain(R x, int which) {
  const R s2 = sqrt(R(2.0));
  if (which == 1) {
    const ExtendedParam p(9.0);
    const R core2 = R(2.0) * half_angle_core(x, p);
    return {arcsin_h1_member(x, p), core2, asin(x), core2 / sigma<R>(p), arcsin_h2_member(x, p)};
  }
  const R c = cos_of_asin(x);
  const auto [diff, sum] = root_pair(x);
  if (which == 2) {
    const R shafer = R(6.0) * diff / (R(4.0) + sum);
    return {R(3.0) * x / (R(2.0) + c), shafer, asin(x), (R(1.0) + R(2.0) * s2) * pi<R>() / R(12.0) * shafer,
            pi<R>() * x / (R(2.0) + c)};
  }
  const R inner = (x + R(2.0) * diff) / (R(1.0) + sum);
  const R outer = x * (c + R(2.0)) / (R(2.0) * c + R(1.0));
  return {pi<R>() / R(4.0) * outer, (s2 + R(3.0)) * pi<R>() / R(14.0) * inner, asin(x), inner, outer};
}

}  // namespace raw

inline Enclosure arcsin_enclosure_full(UnitArg x, const ExtendedParam& p) {
  const double v = x.value();
  const Regime r = classify(p);
  if (r == Regime::upper_h1) {
    return {raw::arcsin_h1_member(v, p), raw::arcsin_h2_member(v, p), true, true, Family::arcsin_full, p, {}};
  }
  if (p.value() == 0.0) {
    // From H1(c,0) < sin t/t < 1.
    return {v, raw::arcsin_h1_member(v, p), true, true, Family::arcsin_full, p, {}};
  }
  if (r == Regime::lower_h1_sharp_lambda) {
    return {raw::arcsin_h2_member(v, p), raw::arcsin_h1_member(v, p), true, true, Family::arcsin_full, p, {}};
  }
  throw regime_error("arcsin enclosure needs p in (-inf,-1] U [0,p1] U [9,inf]");
}

inline Enclosure arcsin_enclosure_halfangle(UnitArg x, const ExtendedParam& p) {
  const double core2 = 2.0 * raw::half_angle_core(x.value(), p);
  const double s = raw::sigma<double>(p);
  if (md_direct(p)) return {core2, core2 / s, true, true, Family::arcsin_half_angle, p, {}};
  if (md_reversed(p)) return {core2 / s, core2, true, true, Family::arcsin_half_angle, p, {}};
  throw regime_error("half-angle arcsin enclosure needs p in (-inf,-1] U [0,p1] U [9,inf]");
}

// arcsin counterpart of the u2/u1 enclosure: p in (-inf,-1] U [9,inf], q in [0,p1].
inline Enclosure arcsin_enclosure_mf(UnitArg x, const ExtendedParam& p, double q) {
  if (!mf_lower_param(p)) throw regime_error("MF needs p in (-inf,-1] U [9,inf]");
  if (!(q >= 0.0 && q <= SharpConstants::get().p1)) throw regime_error("MF needs q in [0, p1]");
  const ExtendedParam eq(q);
  return {raw::arcsin_mf_member(x.value(), eq), raw::arcsin_mf_member(x.value(), p), true, true,
          Family::arcsin_mf, p, eq};
}

enum class ArcsinChain { p31 = 1, p32 = 2, p33 = 3 };

inline std::array<double, 5> arcsin_chains(UnitArg x, ArcsinChain which) {
  return raw::arcsin_chain(x.value(), static_cast<int>(which));
}

}  // namespace sincb
