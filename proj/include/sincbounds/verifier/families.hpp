#pragma once

// Single-parameter claim cases. Each builder returns the defining checks of
// one inequality family at a given parameter; the registry samples them at
// admissible parameters and the threshold probes just outside.

#include <cmath>
#include <string>
#include <type_traits>

#include "sincbounds/bounds.hpp"
#include "sincbounds/constants.hpp"
#include "sincbounds/kernel.hpp"
#include "sincbounds/verifier/claim.hpp"

namespace sincb::verifier::families {

using std::cbrt;
using std::cos;
using std::cosh;
using std::exp;
using std::sqrt;

inline std::string label(const ExtendedParam& p) { return "p=" + p.to_string(); }

// sin t/t < H1(cos t, p)
inline ClaimCase ma_upper(const ExtendedParam& p) {
  return make_case(label(p), [p](auto t, auto& out) { out.lt(raw::sinc(t), raw::h1(cos(t), p)); });
}

// H2(cos t, p) < sin t/t < H1(cos t, p)
inline ClaimCase ma(const ExtendedParam& p) {
  return make_case(label(p), [p](auto t, auto& out) {
    const auto c = cos(t);
    out.chain({raw::h2(c, p), raw::sinc(t), raw::h1(c, p)});
  });
}

// H1(cos t, p) < sin t/t
inline ClaimCase mb_lower(const ExtendedParam& p) {
  return make_case(label(p), [p](auto t, auto& out) { out.lt(raw::h1(cos(t), p), raw::sinc(t)); });
}

// H1 < sin t/t < H2
inline ClaimCase mb_lambda(const ExtendedParam& p) {
  return make_case(label(p), [p](auto t, auto& out) {
    const auto c = cos(t);
    out.chain({raw::h1(c, p), raw::sinc(t), raw::h2(c, p)});
  });
}

// H1 < sin t/t <= delta_p H1. delta_p = exp f(t0) is evaluated in the working
// precision; f is flat at t0, so the double-accurate t0 costs nothing.
inline ClaimCase mb_delta(double p) {
  const ExtendedParam ep(p);
  const double t0 = compute_t0(p).value;
  const double delta_native = std::exp(raw::f(t0, ep));
  const dd delta_ext = exp(raw::f(dd(t0), ep));
  return make_case(label(ep), [=](auto t, auto& out) {
    using R = std::decay_t<decltype(t)>;
    R delta;
    if constexpr (std::is_same_v<R, double>) {
      delta = delta_native;
    } else {
      delta = delta_ext;
    }
    const auto h = raw::h1(cos(t), ep);
    const auto s = raw::sinc(t);
    out.lt(h, s);
    out.le(s, delta * h);
  });
}

// Half-angle family: sigma X < sin t/t < X (direct) or the reverse.
inline ClaimCase md(const ExtendedParam& p, bool reversed) {
  return make_case(label(p), [p, reversed](auto t, auto& out) {
    using R = std::decay_t<decltype(t)>;
    const R x = raw::half_angle(t, p);
    const R sx = raw::sigma<R>(p) * x;
    if (reversed) {
      out.chain({x, raw::sinc(t), sx});
    } else {
      out.chain({sx, raw::sinc(t), x});
    }
  });
}

// u2/u1(cos t, p) < sin t/t < u2/u1(cos t, q)
inline ClaimCase mf(const ExtendedParam& p, const ExtendedParam& q) {
  return make_case(label(p) + ",q=" + q.to_string(), [p, q](auto t, auto& out) {
    const auto c = cos(t);
    out.chain({raw::u_ratio(c, p), raw::sinc(t), raw::u_ratio(c, q)});
  });
}

// H5(cosh t, p) < sinh t/t
inline ClaimCase mg(const ExtendedParam& p) {
  return make_case(label(p), [p](auto t, auto& out) { out.lt(raw::h5(cosh(t), p), raw::sinhc(t)); });
}

// sinh t/t < H5(cosh t, p)
inline ClaimCase mg_reversed(const ExtendedParam& p) {
  return make_case(label(p), [p](auto t, auto& out) { out.lt(raw::sinhc(t), raw::h5(cosh(t), p)); });
}

// x <= H1(x^3, p)
inline ClaimCase h1_cube_above(const ExtendedParam& p) {
  return make_case(label(p), [p](auto x, auto& out) { out.le(x, raw::h1(x * x * x, p)); });
}

// H1(x^3, p) <= x
inline ClaimCase h1_cube_below(const ExtendedParam& p) {
  return make_case(label(p), [p](auto x, auto& out) { out.le(raw::h1(x * x * x, p), x); });
}

inline ClaimCase u_positive(double p) {
  return make_case(label(ExtendedParam::unchecked(p)), [p](auto x, auto& out) {
    using R = std::decay_t<decltype(x)>;
    out.lt(R(0.0), raw::u1(x, p));
    out.lt(R(0.0), raw::u2(x, p));
  });
}

inline ClaimCase u3_nonnegative(double p) {
  return make_case(label(ExtendedParam::unchecked(p)), [p](auto x, auto& out) {
    using R = std::decay_t<decltype(x)>;
    out.le(R(0.0), raw::u3(x, p));
  });
}

inline ClaimCase u3_nonpositive(double p) {
  return make_case(label(ExtendedParam::unchecked(p)), [p](auto x, auto& out) {
    using R = std::decay_t<decltype(x)>;
    out.le(raw::u3(x, p), R(0.0));
  });
}

inline constexpr double kCrossingExclusion = 1e-9;

// u3 < 0 left of x1(p), > 0 right of it.
inline ClaimCase u3_crossing(double p) {
  const double x1 = compute_x1(p).value;
  return make_case(label(ExtendedParam(p)) + ",x1=" + format_real(x1), [p, x1](auto x, auto& out) {
    using R = std::decay_t<decltype(x)>;
    const double xd = to_double(x);
    if (std::abs(xd - x1) < kCrossingExclusion) return;
    if (xd < x1) {
      out.lt(raw::u3(x, p), R(0.0));
    } else {
      out.lt(R(0.0), raw::u3(x, p));
    }
  });
}

inline ClaimCase g_negative(const ExtendedParam& p) {
  return make_case(label(p), [p](auto t, auto& out) {
    using R = std::decay_t<decltype(t)>;
    out.lt(raw::g(t, p), R(0.0));
  });
}

inline ClaimCase g_positive(const ExtendedParam& p) {
  return make_case(label(p), [p](auto t, auto& out) {
    using R = std::decay_t<decltype(t)>;
    out.lt(R(0.0), raw::g(t, p));
  });
}

// g > 0 before t0(p), g < 0 after.
inline ClaimCase g_crossing(double p) {
  const ExtendedParam ep(p);
  const double t0 = compute_t0(p).value;
  return make_case(label(ep) + ",t0=" + format_real(t0), [ep, t0](auto t, auto& out) {
    using R = std::decay_t<decltype(t)>;
    const double td = to_double(t);
    if (std::abs(td - t0) < kCrossingExclusion) return;
    if (td < t0) {
      out.lt(R(0.0), raw::g(t, ep));
    } else {
      out.lt(raw::g(t, ep), R(0.0));
    }
  });
}

inline ClaimCase df_negative(const ExtendedParam& p) {
  return make_case(label(p), [p](auto t, auto& out) {
    using R = std::decay_t<decltype(t)>;
    out.lt(raw::df_dt(t, p), R(0.0));
  });
}

inline ClaimCase df_positive(const ExtendedParam& p) {
  return make_case(label(p), [p](auto t, auto& out) {
    using R = std::decay_t<decltype(t)>;
    out.lt(R(0.0), raw::df_dt(t, p));
  });
}

// f increasing before t0(p), decreasing after.
inline ClaimCase df_crossing(double p) {
  const ExtendedParam ep(p);
  const double t0 = compute_t0(p).value;
  return make_case(label(ep) + ",t0=" + format_real(t0), [ep, t0](auto t, auto& out) {
    using R = std::decay_t<decltype(t)>;
    const double td = to_double(t);
    if (std::abs(td - t0) < kCrossingExclusion) return;
    if (td < t0) {
      out.lt(R(0.0), raw::df_dt(t, ep));
    } else {
      out.lt(raw::df_dt(t, ep), R(0.0));
    }
  });
}

}  // namespace sincb::verifier::families
