#pragma once

// Command implementations behind the CLI. Each returns a JSON payload (or
// profile rows); parsing and exit codes live in the driver.

#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "report_io.hpp"
#include "sincbounds.hpp"

namespace sincb::cli {

using io::Json;
using io::number;
using verifier::GridSpec;
using verifier::Precision;

// Bad flag combinations, missing arguments, unknown names.
class usage_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Options {
  std::optional<std::string> p;
  std::optional<double> q;
  std::optional<double> t;
  std::optional<double> x;
  std::optional<double> a;
  std::optional<double> b;
  std::string family;
  std::string kind = "P";
  int points = 4096;
  Precision precision = Precision::native;
};

inline double need(const std::optional<double>& v, const char* flag) {
  if (!v) throw usage_error(std::string("missing required flag ") + flag);
  return *v;
}

inline ExtendedParam need_p(const Options& o) {
  if (!o.p) throw usage_error("missing required flag --p");
  return parse_param(*o.p);
}

inline double need_finite_p(const Options& o) {
  const ExtendedParam p = need_p(o);
  if (p.is_infinite()) throw domain_error("this operation needs a finite --p");
  return p.value();
}

inline Json root_json(const RootResult& r) {
  return Json{{"value", number(r.value)}, {"residual", number(r.residual)}, {"iterations", r.iterations}};
}

inline Json param_json(const std::optional<ExtendedParam>& p) {
  if (!p) return nullptr;
  if (p->is_infinite()) return p->to_string();
  return number(p->value());
}

// ---- constants ------------------------------------------------------------

inline Json constants_payload() {
  const auto& k = SharpConstants::get();
  const double pi = std::numbers::pi;
  Json out;
  out["p0"] = {{"value", number(k.p0)}, {"residual", number((3.0 * k.p0 + 1.0) - pi * k.p0)}};
  out["p1"] = {{"value", number(k.p1)}, {"residual", number(g_at_half_pi(k.p1))}};
  out["p2"] = {{"value", number(k.p2)},
               {"residual", number(((12.0 - 3.0 * pi) * k.p2 - (6.0 * pi - 4.0)) * k.p2 - 3.0 * pi)}};
  out["p3"] = root_json(compute_p3());
  out["t0_p0"] = root_json(compute_t0(k.p0));
  out["delta_p0"] = number(compute_delta(k.p0));
  out["delta_p0_quotient"] = number(compute_delta_quotient(k.p0));

  Json lam = Json::array();
  for (const auto& p : {ExtendedParam(-1.0), ExtendedParam(1.0), ExtendedParam(3.0), ExtendedParam(k.p1),
                        ExtendedParam(9.0), ExtendedParam::plus_infinity()}) {
    lam.push_back({{"p", param_json(p)}, {"value", number(lambda_const(p))}});
  }
  out["lambda"] = lam;

  Json sig = Json::array();
  for (const auto& p : {ExtendedParam::minus_infinity(), ExtendedParam(-1.0), ExtendedParam(0.0),
                        ExtendedParam(1.0), ExtendedParam(k.p1), ExtendedParam(9.0),
                        ExtendedParam::plus_infinity()}) {
    sig.push_back({{"p", param_json(p)}, {"value", number(sigma_const(p))}});
  }
  out["sigma"] = sig;
  return out;
}

// ---- eval -----------------------------------------------------------------

inline MeanKind parse_mean_kind(const std::string& s) {
  for (MeanKind k : {MeanKind::A, MeanKind::G, MeanKind::Q, MeanKind::L, MeanKind::P, MeanKind::T, MeanKind::NS}) {
    if (s == to_string(k)) return k;
  }
  throw usage_error("unknown mean kind '" + s + "' (A, G, Q, L, P, T, NS)");
}

inline const std::vector<std::string>& eval_functions() {
  static const std::vector<std::string> names{"h1",     "h2",     "h5",    "u1",    "u2",   "u3",
                                              "u4",     "g",      "f",     "df_dt", "F",    "dF",
                                              "lambda", "sigma",  "sinc",  "sinhc", "mean", "regime"};
  return names;
}

inline Json eval_payload(const std::string& fn, const Options& o) {
  Json out{{"function", fn}};
  const auto put = [&](const char* key, double v) { out[key] = number(v); };

  if (fn == "h1" || fn == "h2" || fn == "u1" || fn == "u2" || fn == "u3") {
    const Abscissa x(need(o.x, "--x"));
    const ExtendedParam p = need_p(o);
    put("x", x.value());
    out["p"] = param_json(p);
    double v = 0.0;
    if (fn == "h1") v = h1(x, p);
    if (fn == "h2") v = h2(x, p);
    if (fn == "u1") v = u1(x, p);
    if (fn == "u2") v = u2(x, p);
    if (fn == "u3") v = u3(x, p);
    put("value", v);
  } else if (fn == "u4") {
    const Abscissa x(need(o.x, "--x"));
    if (!o.p) throw usage_error("missing required flag --p");
    double p = 0.0;
    try {
      p = std::stod(*o.p);
    } catch (const std::exception&) {
      throw domain_error("cannot parse parameter '" + *o.p + "'");
    }
    put("x", x.value());
    put("p", p);
    put("value", u4(x, p));
  } else if (fn == "h5") {
    const double x = need(o.x, "--x");
    const ExtendedParam p = need_p(o);
    put("x", x);
    out["p"] = param_json(p);
    put("value", h5(x, p));
  } else if (fn == "g" || fn == "f" || fn == "df_dt") {
    const CircularArg t(need(o.t, "--t"));
    const ExtendedParam p = need_p(o);
    put("t", t.value());
    out["p"] = param_json(p);
    put("value", fn == "g" ? g(t, p) : fn == "f" ? f(t, p) : df_dt(t, p));
  } else if (fn == "F" || fn == "dF") {
    const HyperbolicArg t(need(o.t, "--t"));
    const double p = need_finite_p(o);
    put("t", t.value());
    put("p", p);
    put("value", fn == "F" ? big_f(t, p) : dbig_f_dt(t, p));
  } else if (fn == "lambda" || fn == "sigma") {
    const ExtendedParam p = need_p(o);
    out["p"] = param_json(p);
    put("value", fn == "lambda" ? lambda_const(p) : sigma_const(p));
  } else if (fn == "sinc") {
    const double t = need(o.t, "--t");
    put("t", t);
    put("value", sinc(t));
  } else if (fn == "sinhc") {
    const double t = need(o.t, "--t");
    put("t", t);
    put("value", sinhc(t));
  } else if (fn == "mean") {
    const MeanPair pair(need(o.a, "--a"), need(o.b, "--b"));
    const MeanKind k = parse_mean_kind(o.kind);
    put("a", pair.a());
    put("b", pair.b());
    out["kind"] = to_string(k);
    put("value", mean(k, pair));
  } else if (fn == "regime") {
    const ExtendedParam p = need_p(o);
    out["p"] = param_json(p);
    out["value"] = to_string(classify(p));
  } else {
    throw usage_error("unknown function '" + fn + "'");
  }
  return out;
}

// ---- bounds ---------------------------------------------------------------

inline Json enclosure_json(const Enclosure& e, double truth) {
  return Json{{"family", to_string(e.family)},
              {"p", param_json(e.p)},
              {"q", param_json(e.q)},
              {"lower", number(e.lower)},
              {"upper", number(e.upper)},
              {"lower_strict", e.lower_strict},
              {"upper_strict", e.upper_strict},
              {"value", number(truth)},
              {"contains", e.contains(truth)}};
}

inline Json one_sided_json(const OneSidedBound& b, double truth) {
  return Json{{"family", to_string(b.family)}, {"p", param_json(b.p)},          {"side", to_string(b.side)},
              {"bound", number(b.value)},      {"value", number(truth)},        {"holds", b.holds_for(truth)}};
}

inline Enclosure sinc_enclosure_for(double t, const Options& o) {
  const CircularArg arg(t);
  const ExtendedParam p = need_p(o);
  std::string fam = o.family;
  if (fam.empty()) {
    const Regime r = classify(p);
    if (r == Regime::upper_h1) fam = "ma";
    else if (p.is_finite() && p.value() >= 0.0 && p.value() <= SharpConstants::get().p0) fam = "mb";
    else throw regime_error("no sinc enclosure for p = " + p.to_string() + " (p0 < p < 9)");
  }
  if (fam == "ma") return sinc_enclosure_ma(arg, p);
  if (fam == "mb") {
    if (p.is_infinite()) throw regime_error("MB family needs p in [0, p0]");
    return sinc_enclosure_mb(arg, p.value());
  }
  if (fam == "md") return sinc_enclosure_md(arg, p);
  if (fam == "mf") return sinc_enclosure_mf(arg, p, need(o.q, "--q"));
  throw usage_error("unknown sinc family '" + fam + "' (ma, mb, md, mf)");
}

inline Enclosure arcsin_enclosure_for(double x, const Options& o) {
  const UnitArg arg(x);
  const ExtendedParam p = need_p(o);
  const std::string fam = o.family.empty() ? "full" : o.family;
  if (fam == "full") return arcsin_enclosure_full(arg, p);
  if (fam == "halfangle") return arcsin_enclosure_halfangle(arg, p);
  if (fam == "mf") return arcsin_enclosure_mf(arg, p, need(o.q, "--q"));
  throw usage_error("unknown arcsin family '" + fam + "' (full, halfangle, mf)");
}

inline Enclosure mean_enclosure_for(const MeanPair& pair, const Options& o) {
  const MeanKind k = parse_mean_kind(o.kind);
  const double p = need_finite_p(o);
  if (!o.q) throw usage_error("missing required flag --q");
  const ExtendedParam q(*o.q);
  if (k == MeanKind::P) return mean_enclosure_p(pair, p, q);
  if (k == MeanKind::T) return mean_enclosure_t(pair, p, q);
  throw usage_error("two-sided mean enclosures exist for P and T only");
}

inline Json bounds_payload(const std::string& target, const Options& o) {
  Json out{{"target", target}};
  if (target == "sinc") {
    const double t = need(o.t, "--t");
    out["t"] = number(t);
    out["enclosure"] = enclosure_json(sinc_enclosure_for(t, o), sinc(t));
  } else if (target == "sinhc") {
    const HyperbolicArg t(need(o.t, "--t"));
    out["t"] = number(t.value());
    out["bound"] = one_sided_json(sinhc_bound_mg(t, need_p(o)), sinhc(t.value()));
  } else if (target == "arcsin") {
    const double x = need(o.x, "--x");
    out["x"] = number(x);
    out["enclosure"] = enclosure_json(arcsin_enclosure_for(x, o), std::asin(x));
  } else if (target == "mean") {
    const MeanPair pair(need(o.a, "--a"), need(o.b, "--b"));
    const MeanKind k = parse_mean_kind(o.kind);
    out["a"] = number(pair.a());
    out["b"] = number(pair.b());
    out["kind"] = to_string(k);
    const double truth = mean(k, pair);
    if (k == MeanKind::L) {
      out["bound"] = one_sided_json(mean_lower_l(pair, need_p(o)), truth);
    } else if (k == MeanKind::NS) {
      out["bound"] = one_sided_json(mean_lower_ns(pair, need_p(o)), truth);
    } else {
      out["enclosure"] = enclosure_json(mean_enclosure_for(pair, o), truth);
    }
  } else if (target == "si") {
    const SiArg x(need(o.x, "--x"));
    out["x"] = number(x.value());
    out["enclosure"] = enclosure_json(si_enclosure(x), si_reference(x.value()));
  } else {
    throw usage_error("unknown bounds target '" + target + "' (sinc, sinhc, arcsin, mean, si)");
  }
  return out;
}

// ---- profile --------------------------------------------------------------

struct ProfileRow {
  double arg;
  double value;
  double lower;
  double upper;
  double gap_lower;
  double gap_upper;
};

namespace profile_detail {

template <Real R>
struct Members {
  R value;
  R lower;
  R upper;
};

// Same selection as sinc_enclosure_for, evaluated in R.
template <Real R>
Members<R> sinc_members(R t, const Enclosure& e) {
  const ExtendedParam p = *e.p;
  const R c = cos(t);
  const R s = raw::sinc(t);
  switch (e.family) {
    case Family::ma: return {s, raw::h2(c, p), raw::h1(c, p)};
    case Family::mb_lambda:
      if (p.value() == 0.0) return {s, raw::h1(c, p), R(1.0)};
      return {s, raw::h1(c, p), raw::h2(c, p)};
    case Family::mb_delta: {
      const double t0 = compute_t0(p.value()).value;
      const R delta = exp(raw::f(R(t0), p));
      return {s, raw::h1(c, p), delta * raw::h1(c, p)};
    }
    case Family::md: {
      const R x = raw::half_angle(t, p);
      const R sx = raw::sigma<R>(p) * x;
      return md_direct(p) ? Members<R>{s, sx, x} : Members<R>{s, x, sx};
    }
    case Family::mf: return {s, raw::u_ratio(c, p), raw::u_ratio(c, *e.q)};
    default: break;
  }
  throw usage_error("unsupported sinc family");
}

template <Real R>
Members<R> arcsin_members(R x, const Enclosure& e) {
  const ExtendedParam p = *e.p;
  const R v = asin(x);
  switch (e.family) {
    case Family::arcsin_full:
      if (classify(p) == Regime::upper_h1) return {v, raw::arcsin_h1_member(x, p), raw::arcsin_h2_member(x, p)};
      if (p.value() == 0.0) return {v, x, raw::arcsin_h1_member(x, p)};
      return {v, raw::arcsin_h2_member(x, p), raw::arcsin_h1_member(x, p)};
    case Family::arcsin_half_angle: {
      const R core2 = R(2.0) * raw::half_angle_core(x, p);
      const R s = raw::sigma<R>(p);
      return md_direct(p) ? Members<R>{v, core2, core2 / s} : Members<R>{v, core2 / s, core2};
    }
    case Family::arcsin_mf: return {v, raw::arcsin_mf_member(x, *e.q), raw::arcsin_mf_member(x, p)};
    default: break;
  }
  throw usage_error("unsupported arcsin family");
}

template <Real R>
Members<R> mean_members(R b, MeanKind k, const Enclosure& e) {
  const R a(1.0);
  const R v = raw::mean(k, a, b);
  if (k == MeanKind::P) return {v, raw::mean_p_member(a, b, *e.p), raw::mean_p_member(a, b, *e.q)};
  return {v, raw::mean_t_member(a, b, *e.p), raw::mean_t_member(a, b, *e.q)};
}

template <Real R>
Members<R> si_members(R x) {
  const R core = raw::si_core(x);
  return {raw::si_series(x), raw::si_lower_factor<R>() * core, raw::si_upper_factor<R>() * core};
}

}  // namespace profile_detail

// Enclosure tightness at the midpoints of `points` equal cells of the
// target's domain (log-spaced b with a = 1 for mean). Midpoints stay clear of
// the ends, where both gaps can vanish to high order; the double-checked
// enclosure fixes the family and the gaps are evaluated in double-double.
inline std::vector<ProfileRow> profile_rows(const std::string& target, const Options& o) {
  if (o.points < 1) throw usage_error("--points must be positive");
  double lo = 0.0;
  double hi = 0.0;
  bool log_spaced = false;
  if (target == "sinc" || target == "si") {
    hi = std::numbers::pi / 2;
  } else if (target == "arcsin") {
    hi = 1.0;
  } else if (target == "mean") {
    hi = std::log(1e4);
    log_spaced = true;
  } else {
    throw usage_error("profile targets: sinc, arcsin, mean, si");
  }

  std::vector<ProfileRow> rows;
  rows.reserve(static_cast<std::size_t>(o.points));
  for (int i = 0; i < o.points; ++i) {
    const double u = lo + (hi - lo) * (i + 0.5) / o.points;
    const double v = log_spaced ? std::exp(u) : u;
    profile_detail::Members<dd> m{};
    if (target == "sinc") {
      m = profile_detail::sinc_members(dd(v), sinc_enclosure_for(v, o));
    } else if (target == "arcsin") {
      m = profile_detail::arcsin_members(dd(v), arcsin_enclosure_for(v, o));
    } else if (target == "si") {
      si_enclosure(SiArg(v));
      m = profile_detail::si_members(dd(v));
    } else {
      m = profile_detail::mean_members(dd(v), parse_mean_kind(o.kind), mean_enclosure_for(MeanPair(1.0, v), o));
    }
    rows.push_back({v, to_double(m.value), to_double(m.lower), to_double(m.upper), to_double(m.value - m.lower),
                    to_double(m.upper - m.value)});
  }
  return rows;
}

inline void write_profile_csv(std::ostream& os, const std::vector<ProfileRow>& rows) {
  io::CsvWriter w(os, io::profile_header());
  for (const auto& r : rows) w.row({r.arg, r.value, r.lower, r.upper, r.gap_lower, r.gap_upper});
}

// ---- verify / probe -------------------------------------------------------

inline Json report_json(const verifier::VerificationReport& r) {
  Json j{{"id", r.claim_id},
         {"expected", verifier::to_string(r.expected)},
         {"pass", r.pass},
         {"as_expected", r.as_expected},
         {"domain", verifier::to_string(r.domain)},
         {"precision", verifier::to_string(r.precision)},
         {"points_tested", r.points_tested},
         {"checks", r.checks},
         {"reevaluated", r.reevaluated},
         {"indeterminate", r.indeterminate},
         {"violations", r.violations},
         {"worst_margin", number(r.worst_margin)},
         {"guard", number(r.worst_guard)}};
  if (r.witness) {
    j["witness"] = {{"arg", number(r.witness->arg)},
                    {"params", r.witness->params},
                    {"check", r.witness->check},
                    {"lhs", number(r.witness->lhs)},
                    {"rhs", number(r.witness->rhs)}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

// A pass-expected claim that failed. Claims expected to fail do not affect
// the exit status.
inline bool is_failure(const verifier::VerificationReport& r) {
  return r.expected == verifier::Expect::holds && !r.pass;
}

inline std::vector<verifier::VerificationReport> run_verify(const std::vector<std::string>& ids,
                                                            const GridSpec& spec) {
  const bool all = ids.empty() || (ids.size() == 1 && ids[0] == "all");
  if (all) return verifier::verify_all(spec);
  std::vector<verifier::VerificationReport> out;
  for (const auto& id : ids) out.push_back(verifier::verify(id, spec));
  return out;
}

inline Json verify_payload(const std::vector<verifier::VerificationReport>& reps, const GridSpec& spec) {
  Json claims = Json::array();
  int failures = 0;
  int unexpected = 0;
  for (const auto& r : reps) {
    claims.push_back(report_json(r));
    if (is_failure(r)) ++failures;
    if (!r.as_expected) ++unexpected;
  }
  return Json{{"grid", {{"points", spec.points}, {"cluster", spec.cluster}, {"precision", verifier::to_string(spec.precision)}}},
              {"claims", claims},
              {"summary", {{"total", reps.size()}, {"failures", failures}, {"unexpected", unexpected}}}};
}

inline void write_verify_csv(std::ostream& os, const std::vector<verifier::VerificationReport>& reps) {
  io::CsvWriter w(os, {"id", "expected", "pass", "as_expected", "points", "violations", "worst_margin",
                       "witness_arg", "witness_params"});
  for (const auto& r : reps) {
    w.row_strings({r.claim_id, std::string(verifier::to_string(r.expected)), r.pass ? "true" : "false",
                   r.as_expected ? "true" : "false", std::to_string(r.points_tested),
                   std::to_string(r.violations), format_real(r.worst_margin),
                   r.witness ? format_real(r.witness->arg) : "", r.witness ? r.witness->params : ""});
  }
}

inline double parse_threshold(const std::string& s) {
  const auto& k = SharpConstants::get();
  if (s == "p0") return k.p0;
  if (s == "p1") return k.p1;
  if (s == "p3") return k.p3;
  if (s == "1/9") return 1.0 / 9.0;
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw usage_error("cannot parse threshold '" + s + "'");
}

inline std::vector<verifier::ProbeResult> run_probes(const std::string& family,
                                                     const std::optional<std::string>& threshold,
                                                     const std::optional<double>& epsilon, const GridSpec& spec) {
  if (family.empty()) {
    if (threshold || epsilon) throw usage_error("--threshold and --epsilon need --family");
    return verifier::standard_probes(spec);
  }
  const auto& fam = verifier::find_probe_family(family);
  std::vector<verifier::ProbeResult> out;
  if (threshold) {
    const double v = parse_threshold(*threshold);
    // unmatched thresholds are rejected by threshold_probe
    double eps = 0.05;
    for (const auto& b : fam.boundaries) {
      if (std::abs(b.value - v) < 1e-9) eps = b.default_epsilon;
    }
    out.push_back(verifier::threshold_probe(family, v, epsilon.value_or(eps), spec));
    return out;
  }
  for (const auto& b : fam.boundaries) {
    out.push_back(verifier::threshold_probe(family, b.value, epsilon.value_or(b.default_epsilon), spec));
  }
  return out;
}

inline Json probe_json(const verifier::ProbeResult& r) {
  return Json{{"family", r.family},
              {"boundary", r.boundary.name},
              {"threshold", number(r.boundary.value)},
              {"epsilon", number(r.epsilon)},
              {"inside_p", number(r.inside_p)},
              {"outside_p", number(r.outside_p)},
              {"certified", r.certified()},
              {"inside", report_json(r.inside)},
              {"outside", report_json(r.outside)}};
}

inline void write_probe_csv(std::ostream& os, const std::vector<verifier::ProbeResult>& rs) {
  io::CsvWriter w(os, {"family", "boundary", "inside_p", "inside_pass", "outside_p", "outside_pass",
                       "witness_arg", "certified"});
  for (const auto& r : rs) {
    w.row_strings({r.family, r.boundary.name, format_real(r.inside_p), r.inside.pass ? "true" : "false",
                   format_real(r.outside_p), r.outside.pass ? "true" : "false",
                   r.outside.witness ? format_real(r.outside.witness->arg) : "", r.certified() ? "true" : "false"});
  }
}

}  // namespace sincb::cli
