#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "sincbounds/format.hpp"

namespace sincb {

// Raised for arguments outside a function's mathematical domain.
class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Raised when a bound family is requested for a parameter outside the regime
// where that bound is proven.
class regime_error : public domain_error {
 public:
  using domain_error::domain_error;
};

// Parameter of the H1/H2 families. Finite values must lie in
// (-inf,-1] U [0,inf); the two infinities are the limit members of the family
// and are carried symbolically.
class ExtendedParam {
 public:
  enum class Kind { finite, plus_infinity, minus_infinity };

  explicit ExtendedParam(double p) : kind_(Kind::finite), value_(p) {
    if (!admissible(p)) {
      throw domain_error("parameter " + std::to_string(p) + " outside (-inf,-1] U [0,inf)");
    }
  }

  static ExtendedParam plus_infinity() { return ExtendedParam(Kind::plus_infinity); }
  static ExtendedParam minus_infinity() { return ExtendedParam(Kind::minus_infinity); }

  // Skips the admissibility check. For threshold probes, which evaluate the
  // family formulas just outside the admissible set on purpose.
  static ExtendedParam unchecked(double p) {
    ExtendedParam e(Kind::finite);
    e.value_ = p;
    return e;
  }

  static bool admissible(double p) {
    return std::isfinite(p) && (p <= -1.0 || p >= 0.0);
  }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::finite; }
  bool is_infinite() const { return kind_ != Kind::finite; }

  // Finite value; +-infinity for the limit members.
  double value() const {
    switch (kind_) {
      case Kind::plus_infinity: return HUGE_VAL;
      case Kind::minus_infinity: return -HUGE_VAL;
      default: return value_;
    }
  }

  std::string to_string() const;

  friend bool operator==(const ExtendedParam& a, const ExtendedParam& b) {
    return a.kind_ == b.kind_ && (a.kind_ != Kind::finite || a.value_ == b.value_);
  }

 private:
  explicit ExtendedParam(Kind k) : kind_(k) {}

  Kind kind_;
  double value_ = 0.0;
};

// Parses "inf", "+inf", "-inf" or a decimal number.
inline ExtendedParam parse_param(const std::string& text) {
  if (text == "inf" || text == "+inf" || text == "infinity" || text == "+infinity") {
    return ExtendedParam::plus_infinity();
  }
  if (text == "-inf" || text == "-infinity") return ExtendedParam::minus_infinity();
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw domain_error("cannot parse parameter '" + text + "'");
  }
  if (used != text.size()) throw domain_error("cannot parse parameter '" + text + "'");
  return ExtendedParam(v);
}

inline std::string ExtendedParam::to_string() const {
  switch (kind_) {
    case Kind::plus_infinity: return "+inf";
    case Kind::minus_infinity: return "-inf";
    default: break;
  }
  return format_real(value_);
}

}  // namespace sincb
