#pragma once

// Bivariate means and the bounds that follow from the sinc / sinhc families
// under the substitutions
//   x = arcsin((b-a)/(a+b)):  sin x / x = P/A,   cos x = G/A
//   x = arctan((b-a)/(a+b)):  sin x / x = T/Q,   cos x = A/Q
//   x = arctanh((b-a)/(a+b)): sinh x / x = L/G,  cosh x = A/G
//   x = arcsinh((b-a)/(a+b)): sinh x / x = NS/A, cosh x = Q/A

#include <cmath>
#include <string_view>
#include <type_traits>

#include "sincbounds/bounds.hpp"

namespace sincb {

enum class MeanKind { A, G, Q, L, P, T, NS };

constexpr std::string_view to_string(MeanKind k) {
  switch (k) {
    case MeanKind::A: return "A";
    case MeanKind::G: return "G";
    case MeanKind::Q: return "Q";
    case MeanKind::L: return "L";
    case MeanKind::P: return "P";
    case MeanKind::T: return "T";
    case MeanKind::NS: return "NS";
  }
  return "?";
}

constexpr bool has_removable_singularity(MeanKind k) {
  return k == MeanKind::L || k == MeanKind::P || k == MeanKind::T || k == MeanKind::NS;
}

class MeanPair {
 public:
  MeanPair(double a, double b) : a_(a), b_(b) {
    if (!(a > 0.0 && b > 0.0 && std::isfinite(a) && std::isfinite(b))) {
      throw domain_error("means need positive finite a, b");
    }
  }
  double a() const { return a_; }
  double b() const { return b_; }
  bool distinct() const { return a_ != b_; }

 private:
  double a_;
  double b_;
};

namespace raw {

using std::asin;
using std::atan;
using std::log1p;

// asinh with the same rounding for z and -z.
template <Real R>
R symmetric_asinh(R z) {
  if constexpr (std::is_same_v<R, double>) {
    const double az = std::abs(z);
    const double r = std::log1p(az + az * az / (1.0 + std::sqrt(1.0 + az * az)));
    return std::copysign(r, z);
  } else {
    return asinh(z);
  }
}

template <Real R>
R mean(MeanKind kind, R a, R b) {
  switch (kind) {
    case MeanKind::A: return (a + b) / R(2.0);
    case MeanKind::G: return sqrt(a * b);
    case MeanKind::Q: return sqrt((a * a + b * b) / R(2.0));
    default: break;
  }
  const R z = (a - b) / (a + b);
  switch (kind) {
    case MeanKind::L: {
      if (std::abs(to_double(z)) < 1e-8) {
        // L = A z / atanh z
        const R z2 = z * z;
        return (a + b) / R(2.0) / (R(1.0) + z2 / R(3.0) + z2 * z2 / R(5.0));
      }
      return (a - b) / log1p((a - b) / b);
    }
    case MeanKind::P: return (a - b) / (R(2.0) * asin(z));
    case MeanKind::T: return (a - b) / (R(2.0) * atan(z));
    default: return (a - b) / (R(2.0) * symmetric_asinh(z));
  }
}

// A H1(G/A, p): the sinc family through the arcsin substitution.
template <Real R>
R mean_p_member(R a, R b, const ExtendedParam& p) {
  const R am = mean(MeanKind::A, a, b);
  return am * h1(mean(MeanKind::G, a, b) / am, p);
}

// Q H1(A/Q, p): the sinc family through the arctan substitution.
template <Real R>
R mean_t_member(R a, R b, const ExtendedParam& p) {
  const R qm = mean(MeanKind::Q, a, b);
  return qm * h1(mean(MeanKind::A, a, b) / qm, p);
}

// G H5(A/G, p)
template <Real R>
R mean_l_member(R a, R b, const ExtendedParam& p) {
  const R gm = mean(MeanKind::G, a, b);
  return gm * h5(mean(MeanKind::A, a, b) / gm, p);
}

// A H5(Q/A, p)
template <Real R>
R mean_ns_member(R a, R b, const ExtendedParam& p) {
  const R am = mean(MeanKind::A, a, b);
  return am * h5(mean(MeanKind::Q, a, b) / am, p);
}

}  // namespace raw

inline double mean(MeanKind kind, const MeanPair& pair) {
  if (has_removable_singularity(kind) && !pair.distinct()) {
    throw domain_error(std::string(to_string(kind)) + " mean requires a != b");
  }
  return raw::mean(kind, pair.a(), pair.b());
}

namespace means_detail {

inline void check_pq(const MeanPair& pair, double p, const ExtendedParam& q) {
  if (!pair.distinct()) throw domain_error("mean enclosures require a != b");
  if (!(p >= 0.0 && p <= SharpConstants::get().p0)) throw regime_error("lower member needs p in [0, p0]");
  if (classify(q) != Regime::upper_h1) throw regime_error("upper member needs q in (-inf,-1] U [9,inf]");
}

inline bool hyperbolic_lower(const ExtendedParam& p) {
  return p.is_infinite() || p.value() <= -1.0 || p.value() >= 1.0 / 9.0;
}

}  // namespace means_detail

inline Enclosure mean_enclosure_p(const MeanPair& pair, double p, const ExtendedParam& q) {
  means_detail::check_pq(pair, p, q);
  const ExtendedParam ep(p);
  return {raw::mean_p_member(pair.a(), pair.b(), ep), raw::mean_p_member(pair.a(), pair.b(), q), true, true,
          Family::mean_p, ep, q};
}

inline Enclosure mean_enclosure_t(const MeanPair& pair, double p, const ExtendedParam& q) {
  means_detail::check_pq(pair, p, q);
  const ExtendedParam ep(p);
  return {raw::mean_t_member(pair.a(), pair.b(), ep), raw::mean_t_member(pair.a(), pair.b(), q), true, true,
          Family::mean_t, ep, q};
}

// Lower bound for p in (-inf,-1] U [1/9,inf]; at p = 0 the inequality reverses
// and the result is the upper bound (2G+A)/3.
inline OneSidedBound mean_lower_l(const MeanPair& pair, const ExtendedParam& p) {
  if (!pair.distinct()) throw domain_error("L bound requires a != b");
  const double v = raw::mean_l_member(pair.a(), pair.b(), p);
  if (means_detail::hyperbolic_lower(p)) return {v, Side::lower, Family::mean_l, p};
  if (p.value() == 0.0) return {v, Side::upper, Family::mean_l, p};
  throw regime_error("L bound needs p in (-inf,-1] U {0} U [1/9,inf]");
}

// Same regimes as mean_lower_l; p = 0 gives NS < (2A+Q)/3.
inline OneSidedBound mean_lower_ns(const MeanPair& pair, const ExtendedParam& p) {
  if (!pair.distinct()) throw domain_error("NS bound requires a != b");
  const double v = raw::mean_ns_member(pair.a(), pair.b(), p);
  if (means_detail::hyperbolic_lower(p)) return {v, Side::lower, Family::mean_ns, p};
  if (p.value() == 0.0) return {v, Side::upper, Family::mean_ns, p};
  throw regime_error("NS bound needs p in (-inf,-1] U {0} U [1/9,inf]");
}

}  // namespace sincb
