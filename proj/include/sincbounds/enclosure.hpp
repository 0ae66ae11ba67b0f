#pragma once

#include <optional>
#include <string_view>

#include "sincbounds/extended_param.hpp"

namespace sincb {

// Which proven inequality produced an enclosure.
enum class Family {
  ma,         // H2 < sin t/t < H1, p in (-inf,-1] U [9,inf]
  mb_lambda,  // H1 < sin t/t < H2, p in [0,p1]
  mb_delta,   // H1 < sin t/t <= delta_p H1, p in (p1,p0]
  md,         // half-angle family with the sigma_p constant
  me1,
  me2,
  me3,
  mf,  // u2/u1 ratios
  mg,  // hyperbolic H5
  arcsin_full,
  arcsin_half_angle,
  arcsin_mf,
  mean_p,
  mean_t,
  mean_l,
  mean_ns,
  si,
};

constexpr std::string_view to_string(Family f) {
  switch (f) {
    case Family::ma: return "MA";
    case Family::mb_lambda: return "MB_LAMBDA";
    case Family::mb_delta: return "MB_DELTA";
    case Family::md: return "MD";
    case Family::me1: return "ME1";
    case Family::me2: return "ME2";
    case Family::me3: return "ME3";
    case Family::mf: return "MF";
    case Family::mg: return "MG";
    case Family::arcsin_full: return "ARCSIN_FULL";
    case Family::arcsin_half_angle: return "ARCSIN_HALF_ANGLE";
    case Family::arcsin_mf: return "ARCSIN_MF";
    case Family::mean_p: return "MEAN_P";
    case Family::mean_t: return "MEAN_T";
    case Family::mean_l: return "MEAN_L";
    case Family::mean_ns: return "MEAN_NS";
    case Family::si: return "SI";
  }
  return "?";
}

struct Enclosure {
  double lower = 0.0;
  double upper = 0.0;
  bool lower_strict = true;
  bool upper_strict = true;
  Family family = Family::ma;
  std::optional<ExtendedParam> p;
  std::optional<ExtendedParam> q;  // second parameter of two-parameter families

  bool contains(double v) const {
    const bool lo_ok = lower_strict ? lower < v : lower <= v;
    const bool hi_ok = upper_strict ? v < upper : v <= upper;
    return lo_ok && hi_ok;
  }
  double width() const { return upper - lower; }
};

enum class Side { lower, upper };

constexpr std::string_view to_string(Side s) { return s == Side::lower ? "lower" : "upper"; }

// A bound on one side only, e.g. H5(cosh t, p) < sinh t / t.
struct OneSidedBound {
  double value = 0.0;
  Side side = Side::lower;
  Family family = Family::mg;
  std::optional<ExtendedParam> p;

  bool holds_for(double v) const { return side == Side::lower ? value < v : v < value; }
};

}  // namespace sincb
