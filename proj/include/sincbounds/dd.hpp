#pragma once

// Double-double arithmetic: an unevaluated sum hi + lo with |lo| <= ulp(hi)/2,
// giving roughly 106 bits of significand. Used as the extended-precision
// re-evaluation path when a native margin is too close to zero to classify.
//
// The elementary functions are accurate to a few units of 2^-104 on the
// argument ranges the library needs (|x| up to a few hundred for sin/cos,
// moderate exponents for exp/log). They are not a general-purpose libm.

#include <cmath>
#include <compare>
#include <cstdint>
#include <limits>

namespace sincb {

namespace dd_detail {

inline constexpr double two_sum_err(double a, double b, double s) {
  const double bb = s - a;
  return (a - (s - bb)) + (b - bb);
}

}  // namespace dd_detail

class dd {
 public:
  constexpr dd() = default;
  constexpr dd(double x) : hi_(x), lo_(0.0) {}  // NOLINT: implicit by design of numeric type
  constexpr dd(int x) : hi_(static_cast<double>(x)), lo_(0.0) {}
  constexpr dd(double hi, double lo) : hi_(hi), lo_(lo) {}

  constexpr double hi() const { return hi_; }
  constexpr double lo() const { return lo_; }
  explicit constexpr operator double() const { return hi_ + lo_; }

  static dd two_sum(double a, double b) {
    const double s = a + b;
    return {s, dd_detail::two_sum_err(a, b, s)};
  }
  static dd quick_two_sum(double a, double b) {
    const double s = a + b;
    return {s, b - (s - a)};
  }
  static dd two_prod(double a, double b) {
    const double p = a * b;
    return {p, std::fma(a, b, -p)};
  }

  friend dd operator-(dd a) { return {-a.hi_, -a.lo_}; }

  friend dd operator+(dd a, dd b) {
    dd s = two_sum(a.hi_, b.hi_);
    dd t = two_sum(a.lo_, b.lo_);
    double lo = s.lo_ + t.hi_;
    s = quick_two_sum(s.hi_, lo);
    lo = s.lo_ + t.lo_;
    return quick_two_sum(s.hi_, lo);
  }
  friend dd operator-(dd a, dd b) { return a + (-b); }

  friend dd operator*(dd a, dd b) {
    dd p = two_prod(a.hi_, b.hi_);
    const double lo = p.lo_ + (a.hi_ * b.lo_ + a.lo_ * b.hi_);
    return quick_two_sum(p.hi_, lo);
  }

  friend dd operator/(dd a, dd b) {
    // Long division: three quotient digits.
    const double q1 = a.hi_ / b.hi_;
    dd r = a - b * dd(q1);
    const double q2 = r.hi_ / b.hi_;
    r = r - b * dd(q2);
    const double q3 = r.hi_ / b.hi_;
    dd q = quick_two_sum(q1, q2);
    return q + dd(q3);
  }

  dd& operator+=(dd b) { return *this = *this + b; }
  dd& operator-=(dd b) { return *this = *this - b; }
  dd& operator*=(dd b) { return *this = *this * b; }
  dd& operator/=(dd b) { return *this = *this / b; }

  friend bool operator==(dd a, dd b) { return a.hi_ == b.hi_ && a.lo_ == b.lo_; }
  friend std::partial_ordering operator<=>(dd a, dd b) {
    if (auto c = a.hi_ <=> b.hi_; c != 0) return c;
    return a.lo_ <=> b.lo_;
  }

 private:
  double hi_ = 0.0;
  double lo_ = 0.0;
};

namespace dd_const {
inline constexpr dd pi{3.141592653589793116e+00, 1.224646799147353207e-16};
inline constexpr dd half_pi{1.570796326794896558e+00, 6.123233995736766036e-17};
inline constexpr dd ln2{6.931471805599452862e-01, 2.319046813846299558e-17};
}  // namespace dd_const

inline dd abs(dd a) { return a.hi() < 0.0 ? -a : a; }
inline bool isfinite(dd a) { return std::isfinite(a.hi()); }
inline dd ldexp(dd a, int e) { return {std::ldexp(a.hi(), e), std::ldexp(a.lo(), e)}; }

inline dd sqrt(dd a) {
  if (a.hi() <= 0.0) return dd(std::sqrt(a.hi()));
  const double y = std::sqrt(a.hi());
  // One Newton step in dd from the double estimate.
  const dd yy(y);
  return yy + (a - yy * yy) / (dd(2.0) * yy);
}

inline dd cbrt(dd a) {
  if (a.hi() == 0.0) return dd(0.0);
  dd y(std::cbrt(a.hi()));
  for (int i = 0; i < 2; ++i) y = y - (y * y * y - a) / (dd(3.0) * y * y);
  return y;
}

inline dd exp(dd a) {
  if (a.hi() > 709.0) return dd(std::numeric_limits<double>::infinity());
  if (a.hi() < -745.0) return dd(0.0);
  const double k = std::nearbyint(a.hi() / dd_const::ln2.hi());
  dd r = a - dd_const::ln2 * dd(k);
  constexpr int kSquarings = 10;
  r = ldexp(r, -kSquarings);
  // Taylor series of expm1(r), |r| < 3.4e-4.
  dd term = r;
  dd sum = r;
  for (int n = 2; n < 20; ++n) {
    term = term * r / dd(static_cast<double>(n));
    sum += term;
    if (std::abs(term.hi()) < 1e-36) break;
  }
  // expm1(2r) = expm1(r) * (expm1(r) + 2)
  for (int i = 0; i < kSquarings; ++i) sum = sum * (sum + dd(2.0));
  return ldexp(sum + dd(1.0), static_cast<int>(k));
}

inline dd log(dd a) {
  if (a.hi() <= 0.0) return dd(std::log(a.hi()));
  dd y(std::log(a.hi()));
  for (int i = 0; i < 2; ++i) y = y + a * exp(-y) - dd(1.0);
  return y;
}

// atanh by its odd series; |z| must be small (the callers use |z| < 0.01).
inline dd atanh_series(dd z) {
  const dd z2 = z * z;
  dd power = z;
  dd sum = z;
  for (int k = 1; k < 40; ++k) {
    power *= z2;
    const dd term = power / dd(static_cast<double>(2 * k + 1));
    sum += term;
    if (std::abs(term.hi()) < 1e-34 * std::abs(sum.hi())) break;
  }
  return sum;
}

inline dd log1p(dd x) {
  if (std::abs(x.hi()) < 0.01) return dd(2.0) * atanh_series(x / (dd(2.0) + x));
  return log(dd(1.0) + x);
}

inline dd atanh(dd z) {
  if (std::abs(z.hi()) < 0.01) return atanh_series(z);
  return dd(0.5) * log((dd(1.0) + z) / (dd(1.0) - z));
}

namespace dd_detail {

// sin and cos of |r| <= pi/4 by Taylor series.
inline dd sin_taylor(dd r) {
  const dd r2 = r * r;
  dd term = r;
  dd sum = r;
  for (int n = 1; n < 30; ++n) {
    term = -term * r2 / dd(static_cast<double>((2 * n) * (2 * n + 1)));
    sum += term;
    if (std::abs(term.hi()) < 1e-35 * std::abs(sum.hi()) + 1e-300) break;
  }
  return sum;
}

inline dd cos_taylor(dd r) {
  const dd r2 = r * r;
  dd term(1.0);
  dd sum(1.0);
  for (int n = 1; n < 30; ++n) {
    term = -term * r2 / dd(static_cast<double>((2 * n - 1) * (2 * n)));
    sum += term;
    if (std::abs(term.hi()) < 1e-35) break;
  }
  return sum;
}

struct Reduced {
  dd r;
  int quadrant;
};

inline Reduced reduce_half_pi(dd a) {
  const double k = std::nearbyint(a.hi() / dd_const::half_pi.hi());
  const dd r = a - dd_const::half_pi * dd(k);
  const auto q = static_cast<std::int64_t>(k);
  return {r, static_cast<int>(((q % 4) + 4) % 4)};
}

}  // namespace dd_detail

inline dd sin(dd a) {
  const auto [r, q] = dd_detail::reduce_half_pi(a);
  switch (q) {
    case 0: return dd_detail::sin_taylor(r);
    case 1: return dd_detail::cos_taylor(r);
    case 2: return -dd_detail::sin_taylor(r);
    default: return -dd_detail::cos_taylor(r);
  }
}

inline dd cos(dd a) {
  const auto [r, q] = dd_detail::reduce_half_pi(a);
  switch (q) {
    case 0: return dd_detail::cos_taylor(r);
    case 1: return -dd_detail::sin_taylor(r);
    case 2: return -dd_detail::cos_taylor(r);
    default: return dd_detail::sin_taylor(r);
  }
}

inline dd sinh(dd a) {
  if (std::abs(a.hi()) < 0.5) {
    const dd a2 = a * a;
    dd term = a;
    dd sum = a;
    for (int n = 1; n < 30; ++n) {
      term = term * a2 / dd(static_cast<double>((2 * n) * (2 * n + 1)));
      sum += term;
      if (std::abs(term.hi()) < 1e-35 * std::abs(sum.hi())) break;
    }
    return sum;
  }
  const dd e = exp(a);
  return dd(0.5) * (e - dd(1.0) / e);
}

inline dd cosh(dd a) {
  const dd e = exp(a);
  return dd(0.5) * (e + dd(1.0) / e);
}

inline dd asin(dd x) {
  dd y(std::asin(x.hi()));
  for (int i = 0; i < 2; ++i) y = y - (sin(y) - x) / cos(y);
  return y;
}

inline dd atan(dd x) {
  dd y(std::atan(x.hi()));
  for (int i = 0; i < 2; ++i) {
    const dd s = sin(y);
    const dd c = cos(y);
    y = y - (s - x * c) / (c + x * s);
  }
  return y;
}

inline dd asinh(dd x) {
  const bool negative = x.hi() < 0.0;
  const dd ax = abs(x);
  dd r;
  if (ax.hi() < 0.01) {
    // asinh(z) = sum (-1)^n (2n)! / (4^n (n!)^2 (2n+1)) z^(2n+1)
    const dd z2 = ax * ax;
    dd coeff(1.0);
    dd power = ax;
    r = ax;
    for (int n = 1; n < 30; ++n) {
      coeff = -coeff * dd(static_cast<double>((2 * n - 1) * (2 * n))) /
              dd(static_cast<double>(4 * n * n));
      power *= z2;
      const dd term = coeff * power / dd(static_cast<double>(2 * n + 1));
      r += term;
      if (std::abs(term.hi()) < 1e-35 * std::abs(r.hi())) break;
    }
  } else {
    r = log(ax + sqrt(ax * ax + dd(1.0)));
  }
  return negative ? -r : r;
}

}  // namespace sincb
