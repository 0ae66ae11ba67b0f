#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string_view>
#include <vector>

namespace sincb::verifier {

enum class Precision { native, extended };

constexpr std::string_view to_string(Precision p) { return p == Precision::native ? "native" : "extended"; }

// Argument domains a claim can range over.
enum class DomainKind {
  circular,    // t in [1e-6, pi/2 - 1e-6]
  hyperbolic,  // t in [1e-6, 10]
  unit,        // x in [1e-6, 1 - 1e-6]
  ratio,       // b/a in [1 + 1e-6, 1e4], log-spaced, a = 1
  si,          // x in [1e-6, pi/2]
  point,       // a single evaluation at 0 (scalar claims)
};

constexpr std::string_view to_string(DomainKind d) {
  switch (d) {
    case DomainKind::circular: return "circular";
    case DomainKind::hyperbolic: return "hyperbolic";
    case DomainKind::unit: return "unit";
    case DomainKind::ratio: return "ratio";
    case DomainKind::si: return "si";
    case DomainKind::point: return "point";
  }
  return "?";
}

inline constexpr double kEndpointExclusion = 1e-6;

struct GridSpec {
  int points = 4096;
  Precision precision = Precision::native;
  int cluster = 64;  // extra points packed toward each end
};

struct Interval {
  double lo;
  double hi;
  bool log_spaced = false;
};

inline Interval domain_interval(DomainKind d) {
  constexpr double e = kEndpointExclusion;
  switch (d) {
    case DomainKind::circular: return {e, std::numbers::pi / 2 - e};
    case DomainKind::hyperbolic: return {e, 10.0};
    case DomainKind::unit: return {e, 1.0 - e};
    case DomainKind::ratio: return {1.0 + e, 1e4, true};
    case DomainKind::si: return {e, std::numbers::pi / 2};
    case DomainKind::point: return {0.0, 0.0};
  }
  return {0.0, 0.0};
}

// Uniform points plus Chebyshev-clustered points within 1% of the interval
// length of each end. Sorted, duplicates removed, end points exact.
inline std::vector<double> make_grid(DomainKind d, const GridSpec& spec) {
  if (d == DomainKind::point) return {0.0};
  const Interval iv = domain_interval(d);
  const double a = iv.log_spaced ? std::log(iv.lo) : iv.lo;
  const double b = iv.log_spaced ? std::log(iv.hi) : iv.hi;
  const int n = std::max(spec.points, 2);

  std::vector<double> u;
  u.reserve(static_cast<std::size_t>(n + 2 * spec.cluster));
  for (int i = 0; i < n; ++i) u.push_back(a + (b - a) * static_cast<double>(i) / (n - 1));
  const double span = 0.01 * (b - a);
  for (int k = 1; k <= spec.cluster; ++k) {
    const double w = span * (1.0 - std::cos(std::numbers::pi * k / (2.0 * (spec.cluster + 1))));
    u.push_back(a + w);
    u.push_back(b - w);
  }

  std::vector<double> pts;
  pts.reserve(u.size());
  for (double v : u) pts.push_back(iv.log_spaced ? std::exp(v) : v);
  // exp/log round trip must not push the ends outside the domain
  for (double& v : pts) v = std::clamp(v, iv.lo, iv.hi);
  pts.front() = iv.lo;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  pts.front() = iv.lo;
  pts.back() = iv.hi;
  return pts;
}

}  // namespace sincb::verifier
