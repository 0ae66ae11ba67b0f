// sincbounds: evaluate, enclose, verify and profile the sinc bound families.
//
// Exit status: 0 success, 1 a verification or probe failed, 2 usage or
// domain error.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "commands.hpp"

namespace {

using sincb::cli::Json;
using sincb::cli::Options;

enum class Format { text, json, csv };

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;

struct Output {
  Format format = Format::text;
  std::string path;

  // Routes to --out when given, stdout otherwise.
  void emit(const std::string& body) const {
    if (path.empty()) {
      std::cout << body;
      return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw sincb::cli::usage_error("cannot open " + path + " for writing");
    f << body;
  }

  void record(const std::string& command, const Json& payload) const {
    std::ostringstream os;
    if (format == Format::json) {
      sincb::io::write_json(os, sincb::io::make_record(command, payload));
    } else if (format == Format::text) {
      sincb::io::write_text(os, payload);
    } else {
      throw sincb::cli::usage_error("--format csv is not available for " + command);
    }
    emit(os.str());
  }
};

std::string verify_text(const std::vector<sincb::verifier::VerificationReport>& reps) {
  std::ostringstream os;
  int failures = 0;
  for (const auto& r : reps) {
    os << (r.as_expected ? "ok   " : "FAIL ") << r.claim_id << "  expected=" << sincb::verifier::to_string(r.expected)
       << " pass=" << (r.pass ? "yes" : "no") << " points=" << r.points_tested
       << " worst_margin=" << sincb::format_real(r.worst_margin);
    if (r.witness && !r.pass) os << " witness=" << sincb::format_real(r.witness->arg) << " [" << r.witness->params << "]";
    os << '\n';
    if (sincb::cli::is_failure(r)) ++failures;
  }
  os << reps.size() << " claims, " << failures << " failing\n";
  return os.str();
}

std::string probe_text(const std::vector<sincb::verifier::ProbeResult>& rs) {
  std::ostringstream os;
  for (const auto& r : rs) {
    os << (r.certified() ? "ok   " : "FAIL ") << r.family << " @ " << r.boundary.name
       << "  inside p=" << sincb::format_real(r.inside_p) << (r.inside.pass ? " holds" : " fails")
       << ", outside p=" << sincb::format_real(r.outside_p) << (r.outside.pass ? " holds" : " fails");
    if (r.outside.witness && !r.outside.pass) os << " (witness " << sincb::format_real(r.outside.witness->arg) << ")";
    os << '\n';
  }
  return os.str();
}

int run(int argc, char** argv) {
  CLI::App app{"Sharp rational bounds for sin(t)/t and related functions"};
  app.require_subcommand(1);

  Options opt;
  Output out;
  std::string precision = "native";
  const std::map<std::string, Format> formats{{"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}};

  // Flags shared by every subcommand.
  const auto common = [&](CLI::App* sub) {
    sub->add_option("--p", opt.p, "family parameter (number, inf or -inf)");
    sub->add_option("--q", opt.q, "second parameter");
    sub->add_option("--t", opt.t, "angle or hyperbolic argument");
    sub->add_option("--x", opt.x, "abscissa");
    sub->add_option("--a", opt.a, "first mean argument");
    sub->add_option("--b", opt.b, "second mean argument");
    sub->add_option("--points", opt.points, "grid points")->check(CLI::PositiveNumber);
    sub->add_option("--precision", precision, "native or extended")->check(CLI::IsMember({"native", "extended"}));
    sub->add_option("--format", out.format, "text, json or csv")->transform(CLI::CheckedTransformer(formats));
    sub->add_option("--out", out.path, "write output to a file");
  };

  auto* constants = app.add_subcommand("constants", "sharp constants and their residuals");
  common(constants);

  std::string function;
  auto* eval = app.add_subcommand("eval", "evaluate a kernel function");
  eval->add_option("function", function, "function name")->required();
  eval->add_option("--kind", opt.kind, "mean kind");
  common(eval);

  std::string target;
  auto* bounds = app.add_subcommand("bounds", "enclosure of a target value");
  bounds->add_option("target", target, "sinc, sinhc, arcsin, mean or si")->required();
  bounds->add_option("--family", opt.family, "bound family");
  bounds->add_option("--kind", opt.kind, "mean kind (P, T, L, NS)");
  common(bounds);

  std::vector<std::string> ids;
  auto* verify = app.add_subcommand("verify", "certify claims on a grid");
  verify->add_option("ids", ids, "claim ids, or all");
  common(verify);

  auto* profile = app.add_subcommand("profile", "enclosure tightness along a grid (CSV)");
  profile->add_option("target", target, "sinc, arcsin, mean or si")->required();
  profile->add_option("--family", opt.family, "bound family");
  profile->add_option("--kind", opt.kind, "mean kind (P or T)");
  common(profile);

  std::string probe_family;
  std::optional<std::string> threshold;
  std::optional<double> epsilon;
  auto* probe = app.add_subcommand("probe", "check a parameter boundary from both sides");
  probe->add_option("--family", probe_family, "claim family");
  probe->add_option("--threshold", threshold, "boundary: number, p0, p1, p3 or 1/9");
  probe->add_option("--epsilon", epsilon, "distance from the boundary")->check(CLI::PositiveNumber);
  common(probe);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  opt.precision = precision == "extended" ? sincb::verifier::Precision::extended : sincb::verifier::Precision::native;
  sincb::verifier::GridSpec spec;
  spec.points = opt.points;
  spec.precision = opt.precision;

  if (*constants) {
    out.record("constants", sincb::cli::constants_payload());
    return kExitOk;
  }
  if (*eval) {
    out.record("eval", sincb::cli::eval_payload(function, opt));
    return kExitOk;
  }
  if (*bounds) {
    out.record("bounds", sincb::cli::bounds_payload(target, opt));
    return kExitOk;
  }
  if (*verify) {
    const auto reps = sincb::cli::run_verify(ids, spec);
    std::ostringstream os;
    if (out.format == Format::json) {
      sincb::io::write_json(os, sincb::io::make_record("verify", sincb::cli::verify_payload(reps, spec)));
    } else if (out.format == Format::csv) {
      sincb::cli::write_verify_csv(os, reps);
    } else {
      os << verify_text(reps);
    }
    out.emit(os.str());
    for (const auto& r : reps) {
      if (sincb::cli::is_failure(r)) return kExitVerification;
    }
    return kExitOk;
  }
  if (*profile) {
    if (out.format == Format::json) throw sincb::cli::usage_error("profile writes CSV; use --format csv or text");
    const auto rows = sincb::cli::profile_rows(target, opt);
    std::ostringstream os;
    sincb::cli::write_profile_csv(os, rows);
    out.emit(os.str());
    return kExitOk;
  }
  if (*probe) {
    const auto rs = sincb::cli::run_probes(probe_family, threshold, epsilon, spec);
    std::ostringstream os;
    if (out.format == Format::json) {
      Json arr = Json::array();
      for (const auto& r : rs) arr.push_back(sincb::cli::probe_json(r));
      sincb::io::write_json(os, sincb::io::make_record("probe", Json{{"probes", arr}}));
    } else if (out.format == Format::csv) {
      sincb::cli::write_probe_csv(os, rs);
    } else {
      os << probe_text(rs);
    }
    out.emit(os.str());
    for (const auto& r : rs) {
      if (!r.certified()) return kExitVerification;
    }
    return kExitOk;
  }
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const sincb::cli::usage_error& e) {
    std::cerr << "usage error: " << e.what() << '\n';
  } catch (const sincb::verifier::unknown_claim& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const sincb::domain_error& e) {
    std::cerr << "domain error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return kExitUsage;
}
