#pragma once

// Empirical certification of the "if and only if" parameter boundaries: a
// family's defining inequality is run just inside a boundary, where it must
// hold, and just outside, where the grid must turn up a counterexample.

#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "sincbounds/verifier/families.hpp"
#include "sincbounds/verifier/registry.hpp"

namespace sincb::verifier {

// Where the admissible side lies relative to a boundary.
enum class InsideSide {
  above,  // inside = threshold + eps, outside = threshold - eps
  below,  // inside = threshold - eps, outside = threshold + eps
  exact,  // inside = threshold itself, outside = threshold + eps
};

struct ProbeBoundary {
  std::string name;  // "9", "p0", ...
  double value;
  InsideSide inside;
  double default_epsilon;
};

struct ProbeFamily {
  std::string name;
  DomainKind domain;
  std::function<ClaimCase(double)> build;  // evaluated with an unchecked parameter
  std::vector<ProbeBoundary> boundaries;
};

struct ProbeResult {
  std::string family;
  ProbeBoundary boundary;
  double epsilon = 0.0;
  double inside_p = 0.0;
  double outside_p = 0.0;
  VerificationReport inside;
  VerificationReport outside;
  // Held inside and failed, with a witness, outside.
  bool certified() const { return inside.pass && !outside.pass && outside.witness.has_value(); }
};

namespace probe_detail {

inline ExtendedParam U(double p) { return ExtendedParam::unchecked(p); }

inline std::vector<ProbeFamily> build_families() {
  const auto& k = SharpConstants::get();
  std::vector<ProbeFamily> fs;
  fs.push_back({"THM_MA_UPPER",
                DomainKind::circular,
                [](double p) { return families::ma_upper(U(p)); },
                {{"9", 9.0, InsideSide::above, 0.05}, {"-1", -1.0, InsideSide::below, 0.05}}});
  fs.push_back({"THM_MB_LOWER",
                DomainKind::circular,
                [](double p) { return families::mb_lower(U(p)); },
                {{"p0", k.p0, InsideSide::below, 0.01}}});
  fs.push_back({"THM_MB_LAMBDA",
                DomainKind::circular,
                [](double p) { return families::mb_lambda(U(p)); },
                {{"p1", k.p1, InsideSide::below, 0.05}}});
  fs.push_back({"THM_MG",
                DomainKind::hyperbolic,
                [](double p) { return families::mg(U(p)); },
                {{"1/9", 1.0 / 9.0, InsideSide::above, 0.005}, {"-1", -1.0, InsideSide::below, 0.05}}});
  fs.push_back({"THM_MG_REVERSED",
                DomainKind::hyperbolic,
                [](double p) { return families::mg_reversed(U(p)); },
                {{"0", 0.0, InsideSide::exact, 0.05}}});
  fs.push_back({"LEM_H1X",
                DomainKind::unit,
                [](double p) { return families::h1_cube_above(U(p)); },
                {{"1", 1.0, InsideSide::above, 0.05}, {"-1", -1.0, InsideSide::below, 0.05}}});
  fs.push_back({"LEM_H1X_P0",
                DomainKind::unit,
                [](double p) { return families::h1_cube_below(U(p)); },
                {{"0", 0.0, InsideSide::exact, 0.05}}});
  fs.push_back({"LEM_U3_SIGNA",
                DomainKind::unit,
                [](double p) { return families::u3_nonnegative(p); },
                {{"p3", k.p3, InsideSide::below, 0.05}}});
  fs.push_back({"LEM_U3_SIGNB",
                DomainKind::unit,
                [](double p) { return families::u3_nonpositive(p); },
                {{"9", 9.0, InsideSide::above, 0.05}}});
  fs.push_back({"LEM_SGNGA",
                DomainKind::circular,
                [](double p) { return families::g_negative(U(p)); },
                {{"9", 9.0, InsideSide::above, 0.05}, {"-1", -1.0, InsideSide::below, 0.05}}});
  fs.push_back({"LEM_SGNGB",
                DomainKind::circular,
                [](double p) { return families::g_positive(U(p)); },
                {{"p1", k.p1, InsideSide::below, 0.05}}});
  return fs;
}

}  // namespace probe_detail

inline const std::vector<ProbeFamily>& probe_families() {
  static const std::vector<ProbeFamily> fs = probe_detail::build_families();
  return fs;
}

inline const ProbeFamily& find_probe_family(const std::string& name) {
  for (const auto& f : probe_families()) {
    if (f.name == name) return f;
  }
  throw unknown_claim("unknown probe family '" + name + "'");
}

inline VerificationReport run_probe_side(const ProbeFamily& fam, double p, const GridSpec& spec) {
  Claim c{fam.name + "@" + format_real(p), ClaimTag::probe, "", fam.domain, Expect::holds, {fam.build(p)}};
  return verify(c, spec);
}

// threshold must name one of the family's boundaries (matched to 1e-9).
inline ProbeResult threshold_probe(const std::string& family, double threshold, double epsilon,
                                   const GridSpec& spec = {}) {
  if (!(epsilon > 0.0)) throw domain_error("probe epsilon must be positive");
  const ProbeFamily& fam = find_probe_family(family);
  const ProbeBoundary* hit = nullptr;
  for (const auto& b : fam.boundaries) {
    if (std::abs(b.value - threshold) < 1e-9) hit = &b;
  }
  if (!hit) throw unknown_claim("family " + family + " has no boundary at " + format_real(threshold));

  ProbeResult r;
  r.family = family;
  r.boundary = *hit;
  r.epsilon = epsilon;
  switch (hit->inside) {
    case InsideSide::above:
      r.inside_p = hit->value + epsilon;
      r.outside_p = hit->value - epsilon;
      break;
    case InsideSide::below:
      r.inside_p = hit->value - epsilon;
      r.outside_p = hit->value + epsilon;
      break;
    case InsideSide::exact:
      r.inside_p = hit->value;
      r.outside_p = hit->value + epsilon;
      break;
  }
  r.inside = run_probe_side(fam, r.inside_p, spec);
  r.outside = run_probe_side(fam, r.outside_p, spec);
  return r;
}

// Every boundary of every family at its default epsilon.
inline std::vector<ProbeResult> standard_probes(const GridSpec& spec = {}) {
  std::vector<ProbeResult> out;
  for (const auto& f : probe_families()) {
    for (const auto& b : f.boundaries) out.push_back(threshold_probe(f.name, b.value, b.default_epsilon, spec));
  }
  return out;
}

}  // namespace sincb::verifier
