#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>

#include "sincbounds/verifier/claim.hpp"

namespace sincb::verifier {

inline constexpr int kGuardUlps = 4;

enum class Verdict { pass, fail, indeterminate };

struct Margin {
  double value;  // rhs - lhs
  double guard;
  Verdict verdict;
};

template <Real R>
Margin classify(const Check<R>& c) {
  using std::abs;
  const R diff = c.rhs - c.lhs;
  const R mag = abs(c.lhs) > abs(c.rhs) ? abs(c.lhs) : abs(c.rhs);
  const double guard = kGuardUlps * to_double(real_traits<R>::ulp(mag));
  const double m = to_double(diff);
  if (std::isnan(m)) return {-std::numeric_limits<double>::infinity(), guard, Verdict::fail};
  if (c.strict) {
    if (m > guard) return {m, guard, Verdict::pass};
    if (m < -guard) return {m, guard, Verdict::fail};
    return {m, guard, Verdict::indeterminate};
  }
  return {m, guard, m >= -guard ? Verdict::pass : Verdict::fail};
}

struct Witness {
  double arg = 0.0;
  std::string params;
  int check = 0;  // index of the offending check within the point's list
  double lhs = 0.0;
  double rhs = 0.0;
};

struct VerificationReport {
  std::string claim_id;
  Expect expected = Expect::holds;
  Precision precision = Precision::native;
  DomainKind domain = DomainKind::circular;
  std::int64_t points_tested = 0;
  std::int64_t checks = 0;
  std::int64_t reevaluated = 0;    // native margins inside the guard band
  std::int64_t indeterminate = 0;  // still inside the guard band in extended precision
  std::int64_t violations = 0;
  double worst_margin = std::numeric_limits<double>::infinity();
  double worst_guard = 0.0;
  bool pass = true;         // the inequality held at every tested point
  bool as_expected = true;  // pass matches the claim's expectation
  std::optional<Witness> witness;
};

namespace verify_detail {

struct PointOutcome {
  Margin margin;
  double lhs;
  double rhs;
  bool reevaluated;
};

template <Real R>
PointOutcome outcome_of(const Check<R>& c) {
  return {classify(c), to_double(c.lhs), to_double(c.rhs), false};
}

inline void record(VerificationReport& rep, const PointOutcome& o, double arg, const std::string& params, int idx) {
  ++rep.checks;
  if (o.reevaluated) ++rep.reevaluated;
  if (o.margin.verdict == Verdict::indeterminate) ++rep.indeterminate;
  if (o.margin.verdict == Verdict::fail) ++rep.violations;
  // strict '<' keeps the lowest index on ties
  if (!rep.witness || o.margin.value < rep.worst_margin) {
    rep.worst_margin = o.margin.value;
    rep.worst_guard = o.margin.guard;
    rep.witness = Witness{arg, params, idx, o.lhs, o.rhs};
  }
}

}  // namespace verify_detail

// Runs every case of the claim over the grid. In native precision, any check
// whose margin does not clear the guard band is recomputed in double-double
// and classified there. Single-threaded and index-ordered, so reports are
// bit-identical for a given grid spec.
inline VerificationReport verify(const Claim& claim, const GridSpec& spec = {}) {
  VerificationReport rep;
  rep.claim_id = claim.id;
  rep.expected = claim.expect;
  rep.precision = spec.precision;
  rep.domain = claim.domain;

  const std::vector<double> grid = make_grid(claim.domain, spec);
  CheckList<double> nat;
  CheckList<dd> ext;

  for (const ClaimCase& cs : claim.cases) {
    for (double arg : grid) {
      if (spec.precision == Precision::extended) {
        ext.clear();
        cs.extended(dd(arg), ext);
        if (ext.empty()) continue;
        ++rep.points_tested;
        for (std::size_t i = 0; i < ext.size(); ++i) {
          verify_detail::record(rep, verify_detail::outcome_of(ext[i]), arg, cs.params, static_cast<int>(i));
        }
        continue;
      }

      nat.clear();
      cs.native(arg, nat);
      if (nat.empty()) continue;
      ++rep.points_tested;
      bool extended_ready = false;
      for (std::size_t i = 0; i < nat.size(); ++i) {
        verify_detail::PointOutcome o = verify_detail::outcome_of(nat[i]);
        if (o.margin.verdict != Verdict::pass) {
          if (!extended_ready) {
            ext.clear();
            cs.extended(dd(arg), ext);
            extended_ready = true;
          }
          if (i < ext.size()) {
            o = verify_detail::outcome_of(ext[i]);
            o.reevaluated = true;
          }
        }
        verify_detail::record(rep, o, arg, cs.params, static_cast<int>(i));
      }
    }
  }

  rep.pass = rep.violations == 0;
  rep.as_expected = rep.pass == (claim.expect == Expect::holds);
  return rep;
}

}  // namespace sincb::verifier
