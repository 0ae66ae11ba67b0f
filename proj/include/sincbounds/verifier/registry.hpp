#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "sincbounds/inverse_bounds.hpp"
#include "sincbounds/means.hpp"
#include "sincbounds/si.hpp"
#include "sincbounds/verifier/families.hpp"
#include "sincbounds/verifier/verify.hpp"

namespace sincb::verifier {

class unknown_claim : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace registry_detail {

using std::asin;
using std::cbrt;
using std::cos;
using std::cosh;
using std::sqrt;
using families::label;

inline ExtendedParam P(double v) { return ExtendedParam(v); }
inline ExtendedParam pinf() { return ExtendedParam::plus_infinity(); }
inline ExtendedParam minf() { return ExtendedParam::minus_infinity(); }

template <class Builder>
std::vector<ClaimCase> over(const std::vector<ExtendedParam>& ps, Builder b) {
  std::vector<ClaimCase> out;
  for (const auto& p : ps) out.push_back(b(p));
  return out;
}

template <class Builder>
std::vector<ClaimCase> over_values(const std::vector<double>& ps, Builder b) {
  std::vector<ClaimCase> out;
  for (double p : ps) out.push_back(b(p));
  return out;
}

inline Claim make(std::string id, ClaimTag tag, std::string statement, DomainKind d, Expect e,
                  std::vector<ClaimCase> cases) {
  return {std::move(id), tag, std::move(statement), d, e, std::move(cases)};
}

// Parameter samples per regime: both ends, an interior point, and the
// infinities where they belong.
struct Samples {
  double p0, p1, p3;
  std::vector<ExtendedParam> upper;   // (-inf,-1] U [9,inf]
  std::vector<ExtendedParam> lambda;  // (0, p1]
  std::vector<double> delta;          // (p1, p0]
  std::vector<ExtendedParam> hyper;   // (-inf,-1] U [1/9,inf]
};

inline Samples samples() {
  const auto& k = SharpConstants::get();
  Samples s{k.p0, k.p1, k.p3, {}, {}, {}, {}};
  s.upper = {minf(), P(-10), P(-3), P(-1), P(9), P(20), pinf()};
  s.lambda = {P(0.5), P(1), P(3), P(6), P(k.p1)};
  s.delta = {6.5, 6.8, 7.0, k.p0};
  s.hyper = {minf(), P(-10), P(-1), P(1.0 / 9.0), P(0.5), P(1), P(9), pinf()};
  return s;
}

inline void add_kernel_claims(std::vector<Claim>& reg, const Samples& s) {
  reg.push_back(make("LEM_H12_MONO", ClaimTag::lemma,
                     "H1(x,p) increasing and H2(x,p) decreasing in p on each branch", DomainKind::unit, Expect::holds,
                     {make_case("negative branch", [](auto x, auto& out) {
                        using R = std::decay_t<decltype(x)>;
                        const std::array<double, 4> ps{-100.0, -10.0, -3.0, -1.0};
                        out.lt((R(2.0) + x) / R(3.0), raw::h1(x, P(ps[0])));
                        for (std::size_t i = 1; i < ps.size(); ++i) {
                          out.lt(raw::h1(x, P(ps[i - 1])), raw::h1(x, P(ps[i])));
                          out.lt(raw::h2(x, P(ps[i])), raw::h2(x, P(ps[i - 1])));
                        }
                        out.lt(raw::h2(x, P(ps[0])), (R(2.0) + x) / raw::pi<R>());
                      }),
                      make_case("positive branch", [](auto x, auto& out) {
                        using R = std::decay_t<decltype(x)>;
                        const std::array<double, 6> ps{0.25, 1.0, 3.0, 9.0, 50.0, 1000.0};
                        out.lt(raw::h1(x, P(0.0)), raw::h1(x, P(ps[0])));
                        for (std::size_t i = 1; i < ps.size(); ++i) {
                          out.lt(raw::h1(x, P(ps[i - 1])), raw::h1(x, P(ps[i])));
                          out.lt(raw::h2(x, P(ps[i])), raw::h2(x, P(ps[i - 1])));
                        }
                        out.lt(raw::h1(x, P(ps.back())), (R(2.0) + x) / R(3.0));
                        out.lt((R(2.0) + x) / raw::pi<R>(), raw::h2(x, P(ps.back())));
                      })}));

  reg.push_back(make("LEM_H12_LIMITS", ClaimTag::lemma,
                     "|H1(x,+-1e9) - (2+x)/3| < 1e-8 and |H2(x,+-1e9) - (2+x)/pi| < 1e-8", DomainKind::unit,
                     Expect::holds, {make_case("p=+-1e9", [](auto x, auto& out) {
                       using R = std::decay_t<decltype(x)>;
                       using std::abs;
                       const R tol(1e-8);
                       for (double p : {1e9, -1e9}) {
                         out.lt(abs(raw::h1(x, P(p)) - (R(2.0) + x) / R(3.0)), tol);
                         out.lt(abs(raw::h2(x, P(p)) - (R(2.0) + x) / raw::pi<R>()), tol);
                       }
                     })}));

  reg.push_back(make("LEM_U_POS", ClaimTag::lemma, "u1(x,p) > 0 and u2(x,p) > 0 on the admissible set",
                     DomainKind::unit, Expect::holds,
                     over_values({-100.0, -10.0, -3.0, -1.0, 0.0, 0.5, 1.0, s.p3, s.p1, s.p0, 9.0, 100.0},
                                 families::u_positive)));

  reg.push_back(make("LEM_U3_SIGNA", ClaimTag::lemma, "u3(x,p) >= 0 on (0,1) for p <= p3", DomainKind::unit,
                     Expect::holds, over_values({-10.0, -1.0, 0.0, 3.0, s.p3}, families::u3_nonnegative)));
  reg.push_back(make("LEM_U3_SIGNB", ClaimTag::lemma, "u3(x,p) <= 0 on (0,1) for p >= 9", DomainKind::unit,
                     Expect::holds, over_values({9.0, 20.0, 100.0}, families::u3_nonpositive)));
  reg.push_back(make("LEM_U3_SIGNC", ClaimTag::lemma, "for p in (p3,9), u3 changes sign once at x1(p)",
                     DomainKind::unit, Expect::holds, over_values({5.8, 6.5, s.p0, 8.0, 8.9}, families::u3_crossing)));

  const std::vector<ExtendedParam> g_upper{P(-10), P(-3), P(-1), P(9), P(20), P(100)};
  const std::vector<ExtendedParam> g_lambda{P(0), P(1), P(3), P(6), P(s.p1)};
  const std::vector<double> g_mid{6.5, 7.0, s.p0, 8.0, 8.9};

  reg.push_back(make("LEM_SGNGA", ClaimTag::lemma, "g(t,p) < 0 for p <= -1 or p >= 9", DomainKind::circular,
                     Expect::holds, over(g_upper, families::g_negative)));
  reg.push_back(make("LEM_SGNGB", ClaimTag::lemma, "g(t,p) > 0 for p in [0,p1]", DomainKind::circular,
                     Expect::holds, over(g_lambda, families::g_positive)));
  reg.push_back(make("LEM_SGNGC", ClaimTag::lemma, "for p in (p1,9), g changes sign once at t0(p)",
                     DomainKind::circular, Expect::holds, over_values(g_mid, families::g_crossing)));
  reg.push_back(make("LEM_SGNDFA", ClaimTag::lemma, "f(.,p) decreasing for p <= -1 or p >= 9", DomainKind::circular,
                     Expect::holds, over(g_upper, families::df_negative)));
  reg.push_back(make("LEM_SGNDFB", ClaimTag::lemma, "f(.,p) increasing for p in [0,p1]", DomainKind::circular,
                     Expect::holds, over(g_lambda, families::df_positive)));
  reg.push_back(make("LEM_SGNDFC", ClaimTag::lemma, "for p in (p1,9), f increases up to t0(p) then decreases",
                     DomainKind::circular, Expect::holds, over_values(g_mid, families::df_crossing)));

  reg.push_back(make("LEM_H1X", ClaimTag::lemma, "H1(x^3,p) >= x for p in (-inf,-1] U [1,inf)", DomainKind::unit,
                     Expect::holds,
                     over({minf(), P(-10), P(-2), P(-1), P(1), P(3), P(9), pinf()}, families::h1_cube_above)));
  reg.push_back(make("LEM_H1X_P0", ClaimTag::lemma, "H1(x^3,0) <= x", DomainKind::unit, Expect::holds,
                     {families::h1_cube_below(P(0))}));
}

inline void add_circular_theorems(std::vector<Claim>& reg, const Samples& s) {
  reg.push_back(make("THM_MA", ClaimTag::theorem, "H2(cos t,p) < sin t/t < H1(cos t,p) for p in (-inf,-1] U [9,inf]",
                     DomainKind::circular, Expect::holds, over(s.upper, families::ma)));
  reg.push_back(make("THM_MA_UPPER", ClaimTag::theorem, "sin t/t < H1(cos t,p) for p in (-inf,-1] U [9,inf]",
                     DomainKind::circular, Expect::holds, over(s.upper, families::ma_upper)));
  reg.push_back(make("THM_MA_UPPER_AT_P8", ClaimTag::theorem, "sin t/t < H1(cos t,8) fails near t = 0",
                     DomainKind::circular, Expect::fails, {families::ma_upper(P(8))}));

  reg.push_back(make("COR_MA_CHAIN", ClaimTag::corollary,
                     "2/pi = H2(c,-1) < ... < (2+c)/pi < ... < H2(c,9) < sin t/t < H1(c,9) < ... < (2+c)/3 < ... < "
                     "H1(c,-1) = 1",
                     DomainKind::circular, Expect::holds, {make_case("chain", [](auto t, auto& out) {
                       using R = std::decay_t<decltype(t)>;
                       const R c = cos(t);
                       out.chain({raw::h2(c, P(-1)), raw::h2(c, P(-3)), raw::h2(c, P(-10)), (R(2.0) + c) / raw::pi<R>(),
                                  raw::h2(c, P(50)), raw::h2(c, P(20)), raw::h2(c, P(9)), raw::sinc(t),
                                  raw::h1(c, P(9)), raw::h1(c, P(20)), raw::h1(c, P(50)), (R(2.0) + c) / R(3.0),
                                  raw::h1(c, P(-10)), raw::h1(c, P(-3)), raw::h1(c, P(-1))});
                     })}));

  reg.push_back(make("THM_MB_LOWER", ClaimTag::theorem, "H1(cos t,p) < sin t/t for p in [0,p0]", DomainKind::circular,
                     Expect::holds, over({P(0), P(1), P(s.p1), P(7), P(s.p0)}, families::mb_lower)));
  reg.push_back(make("THM_MB_LAMBDA", ClaimTag::theorem, "H1 < sin t/t < H2 for p in (0,p1]", DomainKind::circular,
                     Expect::holds, over(s.lambda, families::mb_lambda)));
  reg.push_back(make("THM_MB_DELTA", ClaimTag::theorem, "H1 < sin t/t <= delta_p H1 for p in (p1,p0]",
                     DomainKind::circular, Expect::holds, over_values(s.delta, families::mb_delta)));

  {
    const auto& k = SharpConstants::get();
    std::vector<ClaimCase> cases;
    for (double q : {1.0, k.p0}) {
      for (double r : {9.0, 50.0}) {
        for (double sv : {-1.0, -10.0}) {
          cases.push_back(make_case("q=" + format_real(q) + ",r=" + format_real(r) + ",s=" + format_real(sv),
                                    [q, r, sv](auto t, auto& out) { out.chain(raw::mc_chain(t, q, P(r), P(sv))); }));
        }
      }
    }
    reg.push_back(make("THM_MC_CHAIN", ClaimTag::theorem,
                       "H1(c,0) < c^(1/3) < H1(c,q) < sin t/t < H1(c,r) < (2+c)/3 < H1(c,s)", DomainKind::circular,
                       Expect::holds, std::move(cases)));
  }

  reg.push_back(make("THM_MD", ClaimTag::theorem,
                     "sigma_p X(t,p) < sin t/t < X(t,p), X = H1(cos(t/2),p) cos(t/2), p in (-inf,-1] U [9,inf]",
                     DomainKind::circular, Expect::holds,
                     over(s.upper, [](const ExtendedParam& p) { return families::md(p, false); })));
  reg.push_back(make("THM_MD_REVERSED", ClaimTag::theorem, "X(t,p) < sin t/t < sigma_p X(t,p) for p in [0,p1]",
                     DomainKind::circular, Expect::holds,
                     over({P(0), P(1), P(3), P(6), P(s.p1)}, [](const ExtendedParam& p) { return families::md(p, true); })));

  // Members written out with c = cos(t/2).
  reg.push_back(make("COR_MD_D1", ClaimTag::corollary,
                     "2(41 sqrt2 - 25)/(7pi) (2c^2+3c)/(c+14) < sin t/t < 3 (2c^2+3c)/(c+14)", DomainKind::circular,
                     Expect::holds, {make_case("p=9", [](auto t, auto& out) {
                       using R = std::decay_t<decltype(t)>;
                       const R c = cos(t / R(2.0));
                       const R m = (R(2.0) * c * c + R(3.0) * c) / (c + R(14.0));
                       const R k = R(2.0) * (R(41.0) * sqrt(R(2.0)) - R(25.0)) / (R(7.0) * raw::pi<R>());
                       out.chain({k * m, raw::sinc(t), R(3.0) * m});
                     })}));
  reg.push_back(make("COR_MD_D1_PRINTED_VARIANT", ClaimTag::printed_variant,
                     "41(2 sqrt2 - 25)/(7pi) (2c^2+3c)/(c+14) < sin t/t < 3 (2c^2+3c)/(c+14) (negative constant)",
                     DomainKind::circular, Expect::holds, {make_case("p=9", [](auto t, auto& out) {
                       using R = std::decay_t<decltype(t)>;
                       const R c = cos(t / R(2.0));
                       const R m = (R(2.0) * c * c + R(3.0) * c) / (c + R(14.0));
                       const R k = R(41.0) * (R(2.0) * sqrt(R(2.0)) - R(25.0)) / (R(7.0) * raw::pi<R>());
                       out.chain({k * m, raw::sinc(t), R(3.0) * m});
                     })}));
  reg.push_back(make("COR_MD_D2", ClaimTag::corollary,
                     "4(2 sqrt2 - 1)/7 (c^2+2c)/pi < sin t/t < (c^2+2c)/3", DomainKind::circular, Expect::holds,
                     {make_case("p=inf", [](auto t, auto& out) {
                       using R = std::decay_t<decltype(t)>;
                       const R c = cos(t / R(2.0));
                       const R m = c * c + R(2.0) * c;
                       const R k = R(4.0) * (R(2.0) * sqrt(R(2.0)) - R(1.0)) / R(7.0);
                       out.chain({k * m / raw::pi<R>(), raw::sinc(t), m / R(3.0)});
                     })}));
  reg.push_back(make("COR_MD_D3", ClaimTag::corollary,
                     "3c^2/(2c+1) < sin t/t < 4(sqrt2+1)/pi c^2/(2c+1)", DomainKind::circular, Expect::holds,
                     {make_case("p=0", [](auto t, auto& out) {
                       using R = std::decay_t<decltype(t)>;
                       const R c = cos(t / R(2.0));
                       const R m = c * c / (R(2.0) * c + R(1.0));
                       out.chain({R(3.0) * m, raw::sinc(t), R(4.0) * (sqrt(R(2.0)) + R(1.0)) / raw::pi<R>() * m});
                     })}));
  reg.push_back(make("COR_MD_D4", ClaimTag::corollary,
                     "(2c^2+c)/(c+2) < sin t/t < 2(3-sqrt2)/pi (2c^2+c)/(c+2)", DomainKind::circular, Expect::holds,
                     {make_case("p=1", [](auto t, auto& out) {
                       using R = std::decay_t<decltype(t)>;
                       const R c = cos(t / R(2.0));
                       const R m = (R(2.0) * c * c + c) / (c + R(2.0));
                       out.chain({m, raw::sinc(t), R(2.0) * (R(3.0) - sqrt(R(2.0))) / raw::pi<R>() * m});
                     })}));
  reg.push_back(make("COR_MD_D4_PRINTED_VARIANT", ClaimTag::printed_variant,
                     "(2c^2+1)/(c+2) < sin t/t < 2(3-sqrt2)/pi (2c^2+1)/(c+2)", DomainKind::circular, Expect::fails,
                     {make_case("p=1", [](auto t, auto& out) {
                       using R = std::decay_t<decltype(t)>;
                       const R c = cos(t / R(2.0));
                       const R m = (R(2.0) * c * c + R(1.0)) / (c + R(2.0));
                       out.chain({m, raw::sinc(t), R(2.0) * (R(3.0) - sqrt(R(2.0))) / raw::pi<R>() * m});
                     })}));

  // Five-term chains; the computed versions take every constant from sigma_p.
  for (int which = 1; which <= 3; ++which) {
    reg.push_back(make("THM_ME" + std::to_string(which), ClaimTag::theorem,
                       which == 1   ? "H2(cos t,9) < sigma_9 X(t,9) < sin t/t < X(t,9) < H1(cos t,9)"
                       : which == 2 ? "(2+cos t)/pi < sigma_inf X(t,inf) < sin t/t < X(t,inf) < (2+cos t)/3"
                                    : "H1(cos t,1) < X(t,1) < sin t/t < sigma_1 X(t,1) < H2(cos t,1)",
                       DomainKind::circular, Expect::holds, {make_case("computed", [which](auto t, auto& out) {
                         out.chain(raw::me_chain(t, which));
                       })}));
  }
  reg.push_back(make("THM_ME1_PRINTED_VARIANT", ClaimTag::printed_variant,
                     "28/(9pi) (6cos t+9)/(cos t+14) < 41(2 sqrt2 - 25)/(7pi) (2c^2+3c)/(c+14) < sin t/t < ...",
                     DomainKind::circular, Expect::fails, {make_case("printed", [](auto t, auto& out) {
                       using R = std::decay_t<decltype(t)>;
                       const R ct = cos(t);
                       const R c = cos(t / R(2.0));
                       const R pi = raw::pi<R>();
                       const R m = (R(2.0) * c * c + R(3.0) * c) / (c + R(14.0));
                       out.chain({R(28.0) / (R(9.0) * pi) * (R(6.0) * ct + R(9.0)) / (ct + R(14.0)),
                                  R(41.0) * (R(2.0) * sqrt(R(2.0)) - R(25.0)) / (R(7.0) * pi) * m, raw::sinc(t),
                                  (R(6.0) * c * c + R(9.0) * c) / (c + R(14.0)),
                                  (R(6.0) * ct + R(9.0)) / (ct + R(14.0))});
                     })}));
  reg.push_back(make("THM_ME2_PRINTED_VARIANT", ClaimTag::printed_variant,
                     "(2+cos t)/pi < 12(2 sqrt2 - 1)/(7pi) (c^2+2c)/3 < sin t/t < (c^2+2c)/3 < (2+cos t)/3",
                     DomainKind::circular, Expect::holds, {make_case("printed", [](auto t, auto& out) {
                       using R = std::decay_t<decltype(t)>;
                       const R ct = cos(t);
                       const R c = cos(t / R(2.0));
                       const R pi = raw::pi<R>();
                       const R m = (c * c + R(2.0) * c) / R(3.0);
                       out.chain({(R(2.0) + ct) / pi, R(12.0) * (R(2.0) * sqrt(R(2.0)) - R(1.0)) / (R(7.0) * pi) * m,
                                  raw::sinc(t), m, (R(2.0) + ct) / R(3.0)});
                     })}));
  reg.push_back(make("THM_ME3_PRINTED_VARIANT", ClaimTag::printed_variant,
                     "(2cos t+1)/(cos t+2) < (2c^2+1)/(c+2) < sin t/t < 2(3-sqrt2)/pi (2c^2+1)/(c+2) < ...",
                     DomainKind::circular, Expect::fails, {make_case("printed", [](auto t, auto& out) {
                       using R = std::decay_t<decltype(t)>;
                       const R ct = cos(t);
                       const R c = cos(t / R(2.0));
                       const R pi = raw::pi<R>();
                       const R m = (R(2.0) * c * c + R(1.0)) / (c + R(2.0));
                       const R j = (R(2.0) * ct + R(1.0)) / (ct + R(2.0));
                       out.chain({j, m, raw::sinc(t), R(2.0) * (R(3.0) - sqrt(R(2.0))) / pi * m, R(4.0) / pi * j});
                     })}));

  reg.push_back(make("THM_MF", ClaimTag::theorem,
                     "u2/u1(cos t,p) < sin t/t < u2/u1(cos t,q), p in (-inf,-1] U [9,inf], q in [0,p1]",
                     DomainKind::circular, Expect::holds,
                     {families::mf(P(-10), P(0)), families::mf(P(-1), P(1)), families::mf(P(9), P(3)),
                      families::mf(P(20), P(s.p1)), families::mf(pinf(), P(0)), families::mf(minf(), P(s.p1))}));
  reg.push_back(make("THM_MF_MONO", ClaimTag::theorem, "p -> u2/u1(x,p) decreasing on each branch", DomainKind::unit,
                     Expect::holds,
                     {make_case("negative branch", [](auto x, auto& out) {
                        out.chain({raw::u_ratio(x, P(-1)), raw::u_ratio(x, P(-3)), raw::u_ratio(x, P(-10)),
                                   raw::u_ratio(x, P(-100)), raw::u_ratio(x, minf())});
                      }),
                      make_case("positive branch", [](auto x, auto& out) {
                        out.chain({raw::u_ratio(x, pinf()), raw::u_ratio(x, P(1000)), raw::u_ratio(x, P(50)),
                                   raw::u_ratio(x, P(9)), raw::u_ratio(x, P(3)), raw::u_ratio(x, P(1)),
                                   raw::u_ratio(x, P(0))});
                      })}));
}

inline void add_hyperbolic_theorems(std::vector<Claim>& reg, const Samples& s) {
  reg.push_back(make("THM_MG", ClaimTag::theorem, "H5(cosh t,p) < sinh t/t for p in (-inf,-1] U [1/9,inf]",
                     DomainKind::hyperbolic, Expect::holds, over(s.hyper, families::mg)));
  reg.push_back(make("THM_MG_REVERSED", ClaimTag::theorem, "sinh t/t < H5(cosh t,0) = (2+cosh t)/3",
                     DomainKind::hyperbolic, Expect::holds, {families::mg_reversed(P(0))}));
  reg.push_back(make("COR_MG_CHAIN", ClaimTag::corollary,
                     "1 = H5(x,-1) < ... < 3x/(2x+1) < ... < H5(x,1/9) < sinh t/t < (2+x)/3, x = cosh t",
                     DomainKind::hyperbolic, Expect::holds, {make_case("chain", [](auto t, auto& out) {
                       using R = std::decay_t<decltype(t)>;
                       const R x = cosh(t);
                       out.chain({raw::h5(x, P(-1)), raw::h5(x, P(-3)), raw::h5(x, P(-10)),
                                  R(3.0) * x / (R(2.0) * x + R(1.0)), raw::h5(x, P(9)), raw::h5(x, P(1)),
                                  raw::h5(x, P(1.0 / 9.0)), raw::sinhc(t), (R(2.0) + x) / R(3.0)});
                     })}));
  reg.push_back(make("COR_MG_CUBE", ClaimTag::corollary,
                     "H5(cosh t,p) < (1+2cosh t)/(2+cosh t) < cosh^(1/3) t < sinh t/t, p in (-inf,-1] U (1,inf)",
                     DomainKind::hyperbolic, Expect::holds,
                     over({minf(), P(-10), P(-1), P(2), P(9), pinf()}, [](const ExtendedParam& p) {
                       return make_case(label(p), [p](auto t, auto& out) {
                         using R = std::decay_t<decltype(t)>;
                         const R x = cosh(t);
                         out.chain({raw::h5(x, p), (R(1.0) + R(2.0) * x) / (R(2.0) + x), cbrt(x), raw::sinhc(t)});
                       });
                     })));
}

inline void add_arcsin_claims(std::vector<Claim>& reg, const Samples& s) {
  auto full = [](bool reversed) {
    return [reversed](const ExtendedParam& p) {
      return make_case(label(p), [p, reversed](auto x, auto& out) {
        using R = std::decay_t<decltype(x)>;
        const R a = raw::arcsin_h1_member(x, p);
        const R lo = p.is_finite() && p.value() == 0.0 ? x : raw::arcsin_h2_member(x, p);
        if (reversed) {
          out.chain({lo, asin(x), a});
        } else {
          out.chain({a, asin(x), raw::arcsin_h2_member(x, p)});
        }
      });
    };
  };
  reg.push_back(make("PROP_P1", ClaimTag::proposition,
                     "x/H1(sqrt(1-x^2),p) < arcsin x < x/H2(sqrt(1-x^2),p) for p in (-inf,-1] U [9,inf]",
                     DomainKind::unit, Expect::holds, over(s.upper, full(false))));
  reg.push_back(make("PROP_P1_REVERSED", ClaimTag::proposition,
                     "x/H2 < arcsin x < x/H1 for p in (0,p1]; x < arcsin x < x/H1 at p = 0", DomainKind::unit,
                     Expect::holds, over({P(0), P(1), P(3), P(6), P(s.p1)}, full(true))));

  auto half = [](bool reversed) {
    return [reversed](const ExtendedParam& p) {
      return make_case(label(p), [p, reversed](auto x, auto& out) {
        using R = std::decay_t<decltype(x)>;
        const R core2 = R(2.0) * raw::half_angle_core(x, p);
        const R scaled = core2 / raw::sigma<R>(p);
        if (reversed) {
          out.chain({scaled, asin(x), core2});
        } else {
          out.chain({core2, asin(x), scaled});
        }
      });
    };
  };
  reg.push_back(make("PROP_P2", ClaimTag::proposition,
                     "2 C(x,p) < arcsin x < (2/sigma_p) C(x,p) for p in (-inf,-1] U [9,inf]", DomainKind::unit,
                     Expect::holds, over(s.upper, half(false))));
  reg.push_back(make("PROP_P2_REVERSED", ClaimTag::proposition, "(2/sigma_p) C(x,p) < arcsin x < 2 C(x,p), p in [0,p1]",
                     DomainKind::unit, Expect::holds, over({P(0), P(1), P(3), P(6), P(s.p1)}, half(true))));

  for (int which = 1; which <= 3; ++which) {
    reg.push_back(make("PROP_P3" + std::to_string(which), ClaimTag::proposition,
                       which == 1   ? "five-term arcsin chain at p = 9, constants from sigma_9"
                       : which == 2 ? "five-term arcsin chain at p = inf (Shafer-Fink members)"
                                    : "five-term arcsin chain at p = 1",
                       DomainKind::unit, Expect::holds,
                       {make_case("chain", [which](auto x, auto& out) { out.chain(raw::arcsin_chain(x, which)); })}));
  }
  reg.push_back(make("PROP_P31_PRINTED_VARIANT", ClaimTag::printed_variant,
                     "(x/3)(s+14)/(2s+3) < (1/3)(x+14d)/(3+S) < arcsin x < (41 sqrt2+25)pi/782 (x+14d)/(3+S) < "
                     "(3pi x/28)(s+14)/(2s+3)",
                     DomainKind::unit, Expect::holds, {make_case("printed", [](auto x, auto& out) {
                       using R = std::decay_t<decltype(x)>;
                       const R sq = raw::cos_of_asin(x);
                       const auto [d, sum] = raw::root_pair(x);
                       const R inner = (x + R(14.0) * d) / (R(3.0) + sum);
                       const R outer = x * (sq + R(14.0)) / (R(2.0) * sq + R(3.0));
                       const R k = (R(41.0) * sqrt(R(2.0)) + R(25.0)) * raw::pi<R>() / R(782.0);
                       out.chain({outer / R(3.0), inner / R(3.0), asin(x), k * inner,
                                  R(3.0) * raw::pi<R>() * outer / R(28.0)});
                     })}));
}

inline void add_mean_claims(std::vector<Claim>& reg, const Samples& s) {
  const std::vector<double> ps{0.0, 1.0, s.p0};
  const std::vector<ExtendedParam> qs{minf(), P(-1), P(9), pinf()};
  auto two_param = [&](bool seiffert_p) {
    std::vector<ClaimCase> cases;
    for (double p : ps) {
      for (const auto& q : qs) {
        cases.push_back(make_case(label(P(p)) + ",q=" + q.to_string(), [p, q, seiffert_p](auto b, auto& out) {
          using R = std::decay_t<decltype(b)>;
          const R a(1.0);
          if (seiffert_p) {
            out.chain({raw::mean_p_member(a, b, P(p)), raw::mean(MeanKind::P, a, b), raw::mean_p_member(a, b, q)});
          } else {
            out.chain({raw::mean_t_member(a, b, P(p)), raw::mean(MeanKind::T, a, b), raw::mean_t_member(a, b, q)});
          }
        }));
      }
    }
    return cases;
  };
  reg.push_back(make("PROP_P4", ClaimTag::proposition, "A H1(G/A,p) < P < A H1(G/A,q), p in [0,p0], q <= -1 or q >= 9",
                     DomainKind::ratio, Expect::holds, two_param(true)));
  reg.push_back(make("PROP_P5", ClaimTag::proposition, "Q H1(A/Q,p) < T < Q H1(A/Q,q), p in [0,p0], q <= -1 or q >= 9",
                     DomainKind::ratio, Expect::holds, two_param(false)));

  auto hyper = [](bool logarithmic, bool reversed) {
    return [=](const ExtendedParam& p) {
      return make_case(label(p), [p, logarithmic, reversed](auto b, auto& out) {
        using R = std::decay_t<decltype(b)>;
        const R a(1.0);
        const R m = raw::mean(logarithmic ? MeanKind::L : MeanKind::NS, a, b);
        const R bound = logarithmic ? raw::mean_l_member(a, b, p) : raw::mean_ns_member(a, b, p);
        if (reversed) {
          out.lt(m, bound);
        } else {
          out.lt(bound, m);
        }
      });
    };
  };
  reg.push_back(make("PROP_P6", ClaimTag::proposition, "G H5(A/G,p) < L for p in (-inf,-1] U [1/9,inf]",
                     DomainKind::ratio, Expect::holds, over(s.hyper, hyper(true, false))));
  reg.push_back(make("PROP_P6_REVERSED", ClaimTag::proposition, "L < (2G+A)/3", DomainKind::ratio, Expect::holds,
                     {hyper(true, true)(P(0))}));
  reg.push_back(make("PROP_P7", ClaimTag::proposition, "A H5(Q/A,p) < NS for p in (-inf,-1] U [1/9,inf]",
                     DomainKind::ratio, Expect::holds, over(s.hyper, hyper(false, false))));
  reg.push_back(make("PROP_P7_REVERSED", ClaimTag::proposition, "NS < (2A+Q)/3", DomainKind::ratio, Expect::holds,
                     {hyper(false, true)(P(0))}));
}

inline void add_si_claims(std::vector<Claim>& reg) {
  reg.push_back(make("PROP_P8", ClaimTag::proposition,
                     "(4 sqrt2 - 2)/(7pi) (x + sin x + 8 sin(x/2)) < Si(x) < (x + sin x + 8 sin(x/2))/6 on (0,pi/2]",
                     DomainKind::si, Expect::holds, {make_case("", [](auto x, auto& out) {
                       using R = std::decay_t<decltype(x)>;
                       const R core = raw::si_core(x);
                       out.chain({raw::si_lower_factor<R>() * core, raw::si_series(x), raw::si_upper_factor<R>() * core});
                     })}));
  reg.push_back(make("REMARK_SI_NUMBERS", ClaimTag::remark,
                     "1.3682 ~ (2 sqrt2 - 1)/(7pi)(pi + 8 sqrt2 + 2) < Si(pi/2) < (pi + 8 sqrt2 + 2)/12 ~ 1.3713",
                     DomainKind::point, Expect::holds, {make_case("x=pi/2", [](auto zero, auto& out) {
                       using R = decltype(zero);
                       using std::abs;
                       const R x = raw::pi<R>() / R(2.0);
                       const R core = raw::si_core(x);
                       const R lo = raw::si_lower_factor<R>() * core;
                       const R hi = raw::si_upper_factor<R>() * core;
                       const R s2 = sqrt(R(2.0));
                       const R closed = raw::pi<R>() + R(8.0) * s2 + R(2.0);
                       out.chain({lo, raw::si_series(x), hi});
                       out.lt(abs(lo - R(1.3682)), R(5e-5));
                       out.lt(abs(hi - R(1.3713)), R(5e-5));
                       out.lt(abs(lo - (R(2.0) * s2 - R(1.0)) / (R(7.0) * raw::pi<R>()) * closed), R(1e-14));
                       out.lt(abs(hi - closed / R(12.0)), R(1e-14));
                     })}));
}

inline void add_cross_checks(std::vector<Claim>& reg) {
  auto circ = [&](std::string id, std::string statement, auto f) {
    reg.push_back(make(std::move(id), ClaimTag::cross_check, std::move(statement), DomainKind::circular,
                       Expect::holds, {make_case("", f)}));
  };
  circ("XCHECK_JORDAN", "2/pi < sin t/t < 1", [](auto t, auto& out) {
    using R = std::decay_t<decltype(t)>;
    out.chain({R(2.0) / raw::pi<R>(), raw::sinc(t), R(1.0)});
  });
  circ("XCHECK_MC", "cos^(1/3) t < sin t/t < (2+cos t)/3", [](auto t, auto& out) {
    using R = std::decay_t<decltype(t)>;
    const R c = cos(t);
    out.chain({cbrt(c), raw::sinc(t), (R(2.0) + c) / R(3.0)});
  });
  circ("XCHECK_WU2", "3cos t/(1+2cos t) < sin t/t < 3/(4-cos t)", [](auto t, auto& out) {
    using R = std::decay_t<decltype(t)>;
    const R c = cos(t);
    out.chain({R(3.0) * c / (R(1.0) + R(2.0) * c), raw::sinc(t), R(3.0) / (R(4.0) - c)});
  });
  circ("XCHECK_JIANG", "(1+2cos t)/(2+cos t) < sin t/t", [](auto t, auto& out) {
    using R = std::decay_t<decltype(t)>;
    const R c = cos(t);
    out.lt((R(1.0) + R(2.0) * c) / (R(2.0) + c), raw::sinc(t));
  });
  circ("XCHECK_LIHE", "(7+5cos t)/(11+cos t) = H1(cos t,7) < sin t/t < (9+6cos t)/(14+cos t)", [](auto t, auto& out) {
    using R = std::decay_t<decltype(t)>;
    const R c = cos(t);
    out.chain({(R(7.0) + R(5.0) * c) / (R(11.0) + c), raw::sinc(t), (R(9.0) + R(6.0) * c) / (R(14.0) + c)});
  });
  circ("XCHECK_WU_YANG", "(8/pi)/(4-cos t) < sin t/t < 3/(4-cos t)", [](auto t, auto& out) {
    using R = std::decay_t<decltype(t)>;
    const R c = cos(t);
    out.chain({R(8.0) / raw::pi<R>() / (R(4.0) - c), raw::sinc(t), R(3.0) / (R(4.0) - c)});
  });
  circ("XCHECK_NEUMAN", "(8/pi) t/sin t + cos t < 4 < 3 t/sin t + cos t", [](auto t, auto& out) {
    using R = std::decay_t<decltype(t)>;
    const R c = cos(t);
    const R r = R(1.0) / raw::sinc(t);
    out.chain({R(8.0) / raw::pi<R>() * r + c, R(4.0), R(3.0) * r + c});
  });
}

inline std::vector<Claim> build() {
  const Samples s = samples();
  std::vector<Claim> reg;
  add_kernel_claims(reg, s);
  add_circular_theorems(reg, s);
  add_hyperbolic_theorems(reg, s);
  add_arcsin_claims(reg, s);
  add_mean_claims(reg, s);
  add_si_claims(reg);
  add_cross_checks(reg);
  return reg;
}

}  // namespace registry_detail

inline const std::vector<Claim>& registry() {
  static const std::vector<Claim> reg = registry_detail::build();
  return reg;
}

inline const Claim& find_claim(const std::string& id) {
  const auto& reg = registry();
  const auto it = std::find_if(reg.begin(), reg.end(), [&](const Claim& c) { return c.id == id; });
  if (it == reg.end()) throw unknown_claim("unknown claim id '" + id + "'");
  return *it;
}

inline VerificationReport verify(const std::string& id, const GridSpec& spec = {}) {
  return verify(find_claim(id), spec);
}

inline std::vector<VerificationReport> verify_all(const GridSpec& spec = {}) {
  std::vector<VerificationReport> out;
  for (const Claim& c : registry()) out.push_back(verify(c, spec));
  return out;
}

}  // namespace sincb::verifier
