#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "commands.hpp"
#include "report_io.hpp"
#include "test_support.hpp"

using namespace sincb;
using sincb::io::Json;

TEST(JsonEmission, SeventeenDigitsAndStringInfinities) {
  Json j{{"tenth", 0.1}, {"one", 1.0}, {"inf", io::number(HUGE_VAL)}, {"raw_inf", -HUGE_VAL}, {"n", 3}};
  const std::string s = io::to_json_string(j, 0);
  EXPECT_NE(s.find("\"tenth\":0.10000000000000001"), std::string::npos) << s;
  EXPECT_NE(s.find("\"one\":1.0"), std::string::npos) << s;
  EXPECT_NE(s.find("\"inf\":\"inf\""), std::string::npos) << s;
  EXPECT_NE(s.find("\"raw_inf\":\"-inf\""), std::string::npos) << s;
  EXPECT_NE(s.find("\"n\":3"), std::string::npos) << s;
}

TEST(JsonEmission, RecordRoundTripIsIdempotent) {
  const Json rec = io::make_record("constants", cli::constants_payload());
  EXPECT_EQ(rec["schema_version"], "1.0");
  EXPECT_EQ(rec["command"], "constants");
  const std::string first = io::to_json_string(rec);
  const Json parsed = Json::parse(first);
  const std::string second = io::to_json_string(parsed);
  EXPECT_EQ(first, second);
  EXPECT_NEAR(parsed["payload"]["p3"]["value"].get<double>(), 5.663, 5e-4);
  EXPECT_NEAR(parsed["payload"]["delta_p0"].get<double>(), 1.0015, 5e-5);
  EXPECT_EQ(parsed["payload"]["p0"]["value"].get<double>(), compute_p0());
}

TEST(TextEmission, NestedKeys) {
  std::ostringstream os;
  io::write_text(os, Json{{"a", 1.5}, {"b", {{"c", "x"}}}, {"d", Json::array({1, 2})}});
  EXPECT_EQ(os.str(), "a: 1.5\nb:\n  c: x\nd:\n  - 1\n  - 2\n");
}

TEST(Csv, HeaderQuotingAndNewlines) {
  std::ostringstream os;
  io::CsvWriter w(os, {"a", "b"});
  w.row({0.1, -HUGE_VAL});
  w.row_strings({"x,y", "say \"hi\""});
  EXPECT_EQ(os.str(), "a,b\n0.10000000000000001,-inf\n\"x,y\",\"say \"\"hi\"\"\"\n");
  EXPECT_THROW(w.row({1.0}), std::invalid_argument);
}

TEST(Commands, BoundsSincContainsTruth) {
  cli::Options o;
  o.p = "9";
  o.t = 1.0;
  const Json j = cli::bounds_payload("sinc", o);
  EXPECT_TRUE(j["enclosure"]["contains"].get<bool>());
  EXPECT_EQ(j["enclosure"]["family"], "MA");
  EXPECT_LT(j["enclosure"]["lower"].get<double>(), std::sin(1.0));

  o.p = "8";
  EXPECT_THROW(cli::bounds_payload("sinc", o), regime_error);
  o.p.reset();
  EXPECT_THROW(cli::bounds_payload("sinc", o), cli::usage_error);
  EXPECT_THROW(cli::bounds_payload("tan", o), cli::usage_error);
}

TEST(Commands, OtherBoundsTargets) {
  cli::Options o;
  o.p = "1";
  o.q = 9.0;
  o.a = 1.0;
  o.b = 2.0;
  EXPECT_TRUE(cli::bounds_payload("mean", o)["enclosure"]["contains"].get<bool>());
  o.kind = "NS";
  EXPECT_TRUE(cli::bounds_payload("mean", o)["bound"]["holds"].get<bool>());
  o.x = 0.9;
  o.p = "9";
  EXPECT_TRUE(cli::bounds_payload("arcsin", o)["enclosure"]["contains"].get<bool>());
  o.x = 1.5707963267948966;
  EXPECT_TRUE(cli::bounds_payload("si", o)["enclosure"]["contains"].get<bool>());
  o.t = 2.0;
  o.p = "inf";
  EXPECT_TRUE(cli::bounds_payload("sinhc", o)["bound"]["holds"].get<bool>());
}

TEST(Commands, EvalFunctions) {
  cli::Options o;
  o.x = 0.5;
  o.p = "9";
  EXPECT_DOUBLE_EQ(cli::eval_payload("h1", o)["value"].get<double>(), 12.0 / 14.5);
  EXPECT_EQ(cli::eval_payload("regime", o)["value"], "UPPER_H1");
  o.t = 1.0;
  for (const auto& fn : cli::eval_functions()) {
    if (fn == "h5" || fn == "mean") continue;
    EXPECT_NO_THROW(cli::eval_payload(fn, o)) << fn;
  }
  EXPECT_THROW(cli::eval_payload("h5", o), domain_error);  // x must exceed 1
  EXPECT_THROW(cli::eval_payload("nope", o), cli::usage_error);
}

TEST(Commands, ProfileRowsHavePositiveGaps) {
  cli::Options o;
  o.p = "9";
  o.points = 100;
  const auto rows = cli::profile_rows("sinc", o);
  ASSERT_EQ(rows.size(), 100u);
  for (const auto& r : rows) {
    EXPECT_GT(r.gap_lower, 0.0) << r.arg;
    EXPECT_GT(r.gap_upper, 0.0) << r.arg;
    EXPECT_NEAR(r.value, std::sin(r.arg) / r.arg, 1e-15);
  }
  std::ostringstream os;
  cli::write_profile_csv(os, rows);
  const std::string csv = os.str();
  EXPECT_EQ(csv.rfind("t,value,lower,upper,gap_lower,gap_upper\n", 0), 0u);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 101);
  EXPECT_EQ(csv.find('\r'), std::string::npos);

  for (const char* target : {"arcsin", "si"}) {
    for (const auto& r : cli::profile_rows(target, o)) {
      EXPECT_GT(r.gap_lower, 0.0) << target << " " << r.arg;
      EXPECT_GT(r.gap_upper, 0.0) << target << " " << r.arg;
    }
  }
  o.p = "1";
  o.q = 9.0;
  for (const auto& r : cli::profile_rows("mean", o)) {
    EXPECT_GT(r.gap_lower, 0.0) << r.arg;
    EXPECT_GT(r.gap_upper, 0.0) << r.arg;
  }
  EXPECT_THROW(cli::profile_rows("sinhc", o), cli::usage_error);
}

TEST(Commands, VerifyPayloadAndExitRule) {
  verifier::GridSpec g;
  g.points = 256;
  const auto reps = cli::run_verify({"THM_MA", "THM_MA_UPPER_AT_P8"}, g);
  ASSERT_EQ(reps.size(), 2u);
  EXPECT_FALSE(cli::is_failure(reps[0]));
  EXPECT_FALSE(cli::is_failure(reps[1]));  // fails, as expected
  const Json j = cli::verify_payload(reps, g);
  EXPECT_EQ(j["summary"]["total"], 2);
  EXPECT_EQ(j["summary"]["failures"], 0);
  EXPECT_FALSE(j["claims"][1]["pass"].get<bool>());
  EXPECT_TRUE(j["claims"][1]["witness"].is_object());
  EXPECT_THROW(cli::run_verify({"NOPE"}, g), verifier::unknown_claim);
}

TEST(Commands, ThresholdNames) {
  EXPECT_EQ(cli::parse_threshold("p0"), compute_p0());
  EXPECT_EQ(cli::parse_threshold("1/9"), 1.0 / 9.0);
  EXPECT_EQ(cli::parse_threshold("-1"), -1.0);
  EXPECT_THROW(cli::parse_threshold("nine"), cli::usage_error);
}
