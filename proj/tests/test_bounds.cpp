#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "sincbounds/bounds.hpp"
#include "test_support.hpp"

using namespace sincb;
using testing_support::rel_near;

namespace {

constexpr double kPi = std::numbers::pi;
ExtendedParam P(double p) { return ExtendedParam(p); }
const ExtendedParam kInf = ExtendedParam::plus_infinity();
const ExtendedParam kNegInf = ExtendedParam::minus_infinity();

}  // namespace

TEST(Regime, Classification) {
  const auto& k = SharpConstants::get();
  EXPECT_EQ(classify(P(9.0)), Regime::upper_h1);
  EXPECT_EQ(classify(P(-1.0)), Regime::upper_h1);
  EXPECT_EQ(classify(kInf), Regime::upper_h1);
  EXPECT_EQ(classify(kNegInf), Regime::upper_h1);
  EXPECT_EQ(classify(P(k.p1)), Regime::lower_h1_sharp_lambda);
  EXPECT_EQ(classify(P(0.0)), Regime::lower_h1_sharp_lambda);
  EXPECT_EQ(classify(P(k.p0)), Regime::lower_h1_sharp_delta);
  EXPECT_EQ(classify(P(7.0)), Regime::lower_h1_sharp_delta);
  EXPECT_EQ(classify(P(8.0)), Regime::no_global_bound);
  EXPECT_EQ(to_string(Regime::upper_h1), "UPPER_H1");
}

TEST(EnclosureMA, NamedMembers) {
  for (double t : {0.2, 0.9, 1.4}) {
    const double c = std::cos(t);
    const Enclosure e = sinc_enclosure_ma(CircularArg(t), P(-3.0));
    EXPECT_TRUE(rel_near(e.lower, 8.0 / kPi / (4.0 - c), 1e-15));
    EXPECT_TRUE(rel_near(e.upper, 3.0 / (4.0 - c), 1e-15));
    const Enclosure inf = sinc_enclosure_ma(CircularArg(t), kInf);
    EXPECT_DOUBLE_EQ(inf.lower, (2.0 + c) / kPi);
    EXPECT_DOUBLE_EQ(inf.upper, (2.0 + c) / 3.0);
    EXPECT_EQ(inf.family, Family::ma);
  }
  const Enclosure e9 = sinc_enclosure_ma(CircularArg(1.0), P(9.0));
  const double s = std::sin(1.0);
  EXPECT_TRUE(e9.contains(s));
  // the p = 9 lower member is lambda_9 H1, loose away from the origin
  EXPECT_NEAR(s - e9.lower, 7.72e-3, 1e-5);
  EXPECT_NEAR(e9.upper - s, 4.5e-4, 1e-5);
  EXPECT_THROW(sinc_enclosure_ma(CircularArg(1.0), P(8.0)), regime_error);
  EXPECT_THROW(sinc_enclosure_ma(CircularArg(1.0), P(0.0)), regime_error);
}

TEST(EnclosureMB, LambdaAndDeltaRegimes) {
  const auto& k = SharpConstants::get();
  for (int i = 1; i < 100; ++i) {
    const double t = i * (kPi / 2) / 100.0;
    const Enclosure e1 = sinc_enclosure_mb(CircularArg(t), k.p1);
    EXPECT_EQ(e1.family, Family::mb_lambda);
    EXPECT_LE(e1.upper / e1.lower, 1.0051103300632514);
    EXPECT_TRUE(e1.contains(sinc(t)));

    const Enclosure e0 = sinc_enclosure_mb(CircularArg(t), k.p0);
    EXPECT_EQ(e0.family, Family::mb_delta);
    EXPECT_FALSE(e0.upper_strict);
    EXPECT_TRUE(rel_near(e0.upper, compute_delta(k.p0) * e0.lower, 1e-15));
    EXPECT_TRUE(e0.contains(sinc(t)));

    const double c = std::cos(t);
    EXPECT_DOUBLE_EQ(sinc_enclosure_mb(CircularArg(t), 1.0).lower, (1.0 + 2.0 * c) / (2.0 + c));
  }
  const Enclosure z = sinc_enclosure_mb(CircularArg(0.5), 0.0);
  EXPECT_EQ(z.upper, 1.0);
  EXPECT_TRUE(z.contains(sinc(0.5)));
  EXPECT_THROW(sinc_enclosure_mb(CircularArg(1.0), 7.1), regime_error);
  EXPECT_THROW(sinc_enclosure_mb(CircularArg(1.0), -1.0), regime_error);
}

TEST(ChainMC, StrictlyIncreasingInOrder) {
  const auto chain = sinc_chain_mc(CircularArg(0.7), 1.0, P(9.0), P(-1.0));
  for (std::size_t i = 1; i < chain.size(); ++i) EXPECT_LT(chain[i - 1], chain[i]) << i;
  EXPECT_DOUBLE_EQ(chain[3], sinc(0.7));
  EXPECT_DOUBLE_EQ(chain[6], 1.0);  // s = -1 member is identically 1
  for (int i = 1; i < 100; ++i) {
    const double c = std::cos(i * (kPi / 2) / 100.0);
    EXPECT_LT(raw::h1(c, P(0.0)), std::cbrt(c));
  }
  EXPECT_THROW(sinc_chain_mc(CircularArg(0.7), 0.5, P(9.0), P(-1.0)), regime_error);
  EXPECT_THROW(sinc_chain_mc(CircularArg(0.7), 1.0, P(8.0), P(-1.0)), regime_error);
  EXPECT_THROW(sinc_chain_mc(CircularArg(0.7), 1.0, P(9.0), P(0.0)), regime_error);
}

TEST(EnclosureMD, NamedMembers) {
  const double s2 = std::sqrt(2.0);
  for (double t : {0.3, 1.0, 1.5}) {
    const double c = std::cos(t / 2);
    const Enclosure d3 = sinc_enclosure_md(CircularArg(t), P(0.0));
    EXPECT_TRUE(rel_near(d3.lower, 3 * c * c / (2 * c + 1), 1e-15));
    EXPECT_TRUE(rel_near(d3.upper, 4 * (s2 + 1) / kPi * c * c / (2 * c + 1), 1e-15));
    const Enclosure d4 = sinc_enclosure_md(CircularArg(t), P(1.0));
    EXPECT_TRUE(rel_near(d4.lower, (2 * c * c + c) / (c + 2), 1e-15));
    // the variant with a constant 1 in place of c overshoots sin t/t
    if (t > 0.5) {
      EXPECT_GT((2 * c * c + 1) / (c + 2), sinc(t));
    }
    EXPECT_TRUE(rel_near(d4.upper / d4.lower, 2 * (3 - s2) / kPi, 1e-15));
    const Enclosure d2 = sinc_enclosure_md(CircularArg(t), kInf);
    EXPECT_TRUE(rel_near(d2.upper, (c * c + 2 * c) / 3, 1e-15));
    for (const Enclosure& e : {d2, d3, d4}) EXPECT_TRUE(e.contains(sinc(t)));
  }
  EXPECT_THROW(sinc_enclosure_md(CircularArg(1.0), P(7.0)), regime_error);
}

TEST(ChainsME, OrderAndMembers) {
  for (double t : {0.4, 1.0, 1.45}) {
    for (MeChain m : {MeChain::me1, MeChain::me2, MeChain::me3}) {
      const auto ch = sinc_chains_me(CircularArg(t), m);
      for (std::size_t i = 1; i < ch.size(); ++i) EXPECT_LT(ch[i - 1], ch[i]) << t << " " << i;
      EXPECT_DOUBLE_EQ(ch[2], sinc(t));
    }
    const double c = std::cos(t);
    const auto me3 = sinc_chains_me(CircularArg(t), MeChain::me3);
    EXPECT_TRUE(rel_near(me3[4], 4.0 / kPi * (2 * c + 1) / (c + 2), 1e-15));
    const auto me1 = sinc_chains_me(CircularArg(t), MeChain::me1);
    const Enclosure md9 = sinc_enclosure_md(CircularArg(t), P(9.0));
    EXPECT_DOUBLE_EQ(me1[1], md9.lower);
    EXPECT_DOUBLE_EQ(me1[3], md9.upper);
  }
  EXPECT_TRUE(rel_near(raw::sigma<double>(kInf), 12 * (2 * std::sqrt(2.0) - 1) / (7 * kPi), 1e-15));
}

TEST(EnclosureMF, RatioMembers) {
  const Enclosure e = sinc_enclosure_mf(CircularArg(0.5), P(9.0), 0.0);
  EXPECT_TRUE(e.contains(sinc(0.5)));
  EXPECT_EQ(e.family, Family::mf);
  // at p = -1 the lower member is cos t
  const Enclosure m1 = sinc_enclosure_mf(CircularArg(0.5), P(-1.0), 3.0);
  EXPECT_DOUBLE_EQ(m1.lower, std::cos(0.5));
  EXPECT_TRUE(m1.contains(sinc(0.5)));
  EXPECT_THROW(sinc_enclosure_mf(CircularArg(0.5), P(3.0), 0.0), regime_error);
  EXPECT_THROW(sinc_enclosure_mf(CircularArg(0.5), P(9.0), 7.0), regime_error);
}

TEST(BoundMG, HyperbolicMembers) {
  for (double t : {0.1, 1.0, 5.0}) {
    const double x = std::cosh(t);
    const OneSidedBound cusa = sinhc_bound_mg(HyperbolicArg(t), P(0.0));
    EXPECT_EQ(cusa.side, Side::upper);
    EXPECT_DOUBLE_EQ(cusa.value, (2.0 + x) / 3.0);
    EXPECT_TRUE(cusa.holds_for(sinhc(t)));
    const OneSidedBound inf = sinhc_bound_mg(HyperbolicArg(t), kInf);
    EXPECT_EQ(inf.side, Side::lower);
    EXPECT_DOUBLE_EQ(inf.value, 3 * x / (2 * x + 1));
    EXPECT_TRUE(inf.holds_for(sinhc(t)));
    EXPECT_GT(sinhc(t), std::cbrt(x));
    EXPECT_GT(std::cbrt(x), (1 + 2 * x) / (2 + x));
    EXPECT_TRUE(sinhc_bound_mg(HyperbolicArg(t), P(1.0 / 9.0)).holds_for(sinhc(t)));
  }
  EXPECT_THROW(sinhc_bound_mg(HyperbolicArg(1.0), P(0.05)), regime_error);
}

// Near t = 0 the sharp members agree with sin t/t to within rounding, so
// containment is checked with a few ulp of slack.
::testing::AssertionResult contains_within_ulps(const Enclosure& e, double s) {
  const double slack = 4 * std::numeric_limits<double>::epsilon() * std::abs(s);
  if (e.lower <= s + slack && s <= e.upper + slack) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << "[" << e.lower << ", " << e.upper << "] misses " << s;
}

TEST(Enclosures, ContainTruthOnRandomSamples) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> ut(1e-3, kPi / 2 - 1e-3);
  const auto& k = SharpConstants::get();
  for (int i = 0; i < 500; ++i) {
    const double t = ut(rng);
    const double s = sinc(t);
    for (double p : {-40.0, -1.0, 9.0, 25.0}) EXPECT_TRUE(contains_within_ulps(sinc_enclosure_ma(CircularArg(t), P(p)), s));
    for (double p : {0.0, 2.0, k.p1, 6.9, k.p0}) EXPECT_TRUE(contains_within_ulps(sinc_enclosure_mb(CircularArg(t), p), s));
    for (double p : {-2.0, 0.0, 3.0, 9.0}) EXPECT_TRUE(contains_within_ulps(sinc_enclosure_md(CircularArg(t), P(p)), s));
  }
}
