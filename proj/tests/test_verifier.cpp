#include <cmath>
#include <cstring>
#include <limits>
#include <set>
#include <string>

#include "sincbounds/verifier/probes.hpp"
#include "sincbounds/verifier/registry.hpp"
#include "sincbounds/verifier/sharpness.hpp"
#include "test_support.hpp"

using namespace sincb;
using namespace sincb::verifier;

namespace {

GridSpec small_grid(int points = 1024) {
  GridSpec g;
  g.points = points;
  return g;
}

}  // namespace

TEST(Grid, UniformPlusClusteredPoints) {
  const auto g = make_grid(DomainKind::circular, GridSpec{});
  EXPECT_EQ(g.size(), 4096u + 128u);
  EXPECT_EQ(g.front(), 1e-6);
  EXPECT_EQ(g.back(), std::numbers::pi / 2 - 1e-6);
  for (std::size_t i = 1; i < g.size(); ++i) EXPECT_LT(g[i - 1], g[i]);

  const auto r = make_grid(DomainKind::ratio, GridSpec{});
  EXPECT_EQ(r.front(), 1.0 + 1e-6);
  EXPECT_EQ(r.back(), 1e4);
  EXPECT_EQ(make_grid(DomainKind::point, GridSpec{}).size(), 1u);

  GridSpec plain;
  plain.points = 100;
  plain.cluster = 0;
  EXPECT_EQ(make_grid(DomainKind::unit, plain).size(), 100u);
}

TEST(Classify, GuardBand) {
  const Check<double> clear{1.0, 1.5, true};
  EXPECT_EQ(classify(clear).verdict, Verdict::pass);
  const Check<double> tie{1.0, 1.0, true};
  EXPECT_EQ(classify(tie).verdict, Verdict::indeterminate);
  const Check<double> tie_le{1.0, 1.0, false};
  EXPECT_EQ(classify(tie_le).verdict, Verdict::pass);
  const Check<double> within{1.0, 1.0 + 2e-16, true};
  EXPECT_EQ(classify(within).verdict, Verdict::indeterminate);
  const Check<double> wrong{1.0, 0.9, true};
  EXPECT_EQ(classify(wrong).verdict, Verdict::fail);
  EXPECT_NEAR(classify(wrong).value, -0.1, 1e-15);
  const Check<double> nan{std::nan(""), 1.0, true};
  EXPECT_EQ(classify(nan).verdict, Verdict::fail);
  EXPECT_EQ(classify(nan).value, -std::numeric_limits<double>::infinity());
  // double-double resolves what double cannot
  const Check<dd> fine{dd(1.0), dd(1.0) + dd(1e-25), true};
  EXPECT_EQ(classify(fine).verdict, Verdict::pass);
}

TEST(Registry, CoversRequiredClaims) {
  const auto& reg = registry();
  EXPECT_GE(reg.size(), 40u);
  std::set<std::string> ids;
  for (const auto& c : reg) {
    EXPECT_TRUE(ids.insert(c.id).second) << "duplicate " << c.id;
    EXPECT_FALSE(c.cases.empty()) << c.id;
    EXPECT_FALSE(c.statement.empty()) << c.id;
  }
  for (const char* id :
       {"LEM_H12_MONO", "LEM_H12_LIMITS", "LEM_U_POS", "LEM_U3_SIGNA", "LEM_U3_SIGNB", "LEM_U3_SIGNC",
        "LEM_SGNGA", "LEM_SGNGB", "LEM_SGNGC", "LEM_SGNDFA", "LEM_SGNDFB", "LEM_SGNDFC", "LEM_H1X", "THM_MA",
        "COR_MA_CHAIN", "THM_MB_LAMBDA", "THM_MB_DELTA", "THM_MC_CHAIN", "THM_MD", "COR_MD_D1", "COR_MD_D2",
        "COR_MD_D3", "COR_MD_D4", "THM_ME1", "THM_ME2", "THM_ME3", "THM_ME1_PRINTED_VARIANT",
        "THM_ME2_PRINTED_VARIANT", "THM_ME3_PRINTED_VARIANT", "THM_MF", "THM_MF_MONO", "THM_MG", "COR_MG_CHAIN",
        "PROP_P1", "PROP_P2", "PROP_P31", "PROP_P32", "PROP_P33", "PROP_P4", "PROP_P5", "PROP_P6", "PROP_P7",
        "PROP_P8", "REMARK_SI_NUMBERS", "XCHECK_WU2", "XCHECK_LIHE", "XCHECK_JIANG", "XCHECK_NEUMAN",
        "THM_MA_UPPER", "THM_MA_UPPER_AT_P8", "LEM_H1X_P0"}) {
    EXPECT_TRUE(ids.count(id)) << "missing " << id;
  }
  EXPECT_THROW(find_claim("NOPE"), unknown_claim);
  EXPECT_THROW(verifier::verify("NOPE"), unknown_claim);
}

TEST(Verify, NamedExamples) {
  const auto ma = verifier::verify("THM_MA_UPPER");
  EXPECT_TRUE(ma.pass);
  EXPECT_GT(ma.points_tested, 4096);

  const auto p8 = verifier::verify("THM_MA_UPPER_AT_P8");
  EXPECT_FALSE(p8.pass);
  EXPECT_TRUE(p8.as_expected);
  ASSERT_TRUE(p8.witness.has_value());
  EXPECT_LT(p8.worst_margin, 0.0);
  // independent scan: sin t/t exceeds H1(cos t, 8) just right of 0
  int above = 0;
  for (int i = 1; i <= 300; ++i) {
    const double t = 0.3 * i / 300.0;
    if (std::sin(t) / t > raw::h1(std::cos(t), ExtendedParam(8.0))) ++above;
  }
  EXPECT_GT(above, 0);

  EXPECT_TRUE(verifier::verify("LEM_H1X_P0").pass);
  EXPECT_TRUE(verifier::verify("XCHECK_NEUMAN").pass);
  EXPECT_TRUE(verifier::verify("XCHECK_LIHE").pass);
}

TEST(Verify, PrintedVariantsBehaveAsRecorded) {
  EXPECT_TRUE(verifier::verify("COR_MD_D1_PRINTED_VARIANT", small_grid()).pass);
  EXPECT_FALSE(verifier::verify("COR_MD_D4_PRINTED_VARIANT", small_grid()).pass);
  EXPECT_FALSE(verifier::verify("THM_ME1_PRINTED_VARIANT", small_grid()).pass);
  EXPECT_TRUE(verifier::verify("THM_ME2_PRINTED_VARIANT", small_grid()).pass);
  EXPECT_FALSE(verifier::verify("THM_ME3_PRINTED_VARIANT", small_grid()).pass);
  EXPECT_TRUE(verifier::verify("PROP_P31_PRINTED_VARIANT", small_grid()).pass);
}

TEST(Verify, AllClaimsMeetExpectations) {
  for (const auto& rep : verify_all()) {
    EXPECT_TRUE(rep.as_expected) << rep.claim_id << " worst=" << rep.worst_margin;
    if (rep.expected == Expect::holds) {
      EXPECT_EQ(rep.violations, 0) << rep.claim_id;
    }
  }
}

TEST(Verify, ExtendedPrecisionAgrees) {
  GridSpec g = small_grid(512);
  g.precision = Precision::extended;
  for (const char* id : {"THM_MA", "THM_MB_DELTA", "THM_MG", "PROP_P4", "LEM_SGNGA"}) {
    const auto rep = verifier::verify(id, g);
    EXPECT_TRUE(rep.pass) << id;
    EXPECT_EQ(rep.precision, Precision::extended);
  }
}

TEST(Verify, DeterministicReports) {
  const auto a = verifier::verify("THM_MC_CHAIN", small_grid());
  const auto b = verifier::verify("THM_MC_CHAIN", small_grid());
  EXPECT_EQ(a.points_tested, b.points_tested);
  EXPECT_EQ(a.checks, b.checks);
  EXPECT_EQ(a.reevaluated, b.reevaluated);
  EXPECT_EQ(a.indeterminate, b.indeterminate);
  EXPECT_EQ(std::memcmp(&a.worst_margin, &b.worst_margin, sizeof(double)), 0);
  ASSERT_TRUE(a.witness && b.witness);
  EXPECT_EQ(a.witness->arg, b.witness->arg);
  EXPECT_EQ(a.witness->params, b.witness->params);
}

TEST(Probes, StandardBoundariesCertified) {
  const auto rs = standard_probes();
  EXPECT_GE(rs.size(), 10u);
  std::set<std::string> seen;
  for (const auto& r : rs) {
    EXPECT_TRUE(r.certified()) << r.family << "@" << r.boundary.name;
    seen.insert(r.family + "@" + r.boundary.name);
  }
  for (const char* b : {"THM_MA_UPPER@9", "THM_MA_UPPER@-1", "THM_MB_LOWER@p0", "THM_MB_LAMBDA@p1", "THM_MG@1/9",
                        "LEM_H1X@1", "LEM_H1X_P0@0"}) {
    EXPECT_TRUE(seen.count(b)) << b;
  }
}

TEST(Probes, WitnessLocations) {
  const auto& k = SharpConstants::get();
  const auto mb = threshold_probe("THM_MB_LOWER", k.p0, 0.01);
  ASSERT_TRUE(mb.outside.witness.has_value());
  EXPECT_GT(mb.outside.witness->arg, 1.5);  // fails at the right end
  EXPECT_NEAR(mb.inside_p, k.p0 - 0.01, 1e-15);

  const auto ma = threshold_probe("THM_MA_UPPER", 9.0, 0.05);
  EXPECT_TRUE(ma.inside.pass);
  EXPECT_FALSE(ma.outside.pass);
  EXPECT_LT(ma.outside.witness->arg, 0.5);  // fails near the origin

  EXPECT_THROW(threshold_probe("THM_MA_UPPER", 5.0, 0.05), unknown_claim);
  EXPECT_THROW(threshold_probe("NOPE", 9.0, 0.05), unknown_claim);
  EXPECT_THROW(threshold_probe("THM_MA_UPPER", 9.0, 0.0), domain_error);
}

TEST(Sharpness, DeltaIsAttainedAndLambdaTouchesTheEnd) {
  const auto& k = SharpConstants::get();
  for (double p : {6.5, 7.0, k.p0}) {
    const GridMax m = sinc_over_h1_max(p, 4096);
    EXPECT_NEAR(m.value, compute_delta(p), 1e-8) << p;
    EXPECT_NEAR(m.arg, compute_t0(p).value, 2e-3) << p;
  }
  for (double p : {-3.0, 1.0, 9.0, 50.0}) EXPECT_LT(h2_endpoint_gap(ExtendedParam(p)), 1e-6) << p;
  EXPECT_LT(h2_endpoint_gap(ExtendedParam::plus_infinity()), 1e-6);
}
