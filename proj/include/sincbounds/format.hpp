#pragma once

#include <array>
#include <charconv>
#include <cmath>
#include <string>

namespace sincb {

// Locale-independent rendering with 17 significant digits (round-trips any
// double). Non-finite values render as "inf", "-inf", "nan".
inline std::string format_real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  std::array<char, 40> buf{};
  auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 17);
  return std::string(buf.data(), res.ptr);
}

}  // namespace sincb
