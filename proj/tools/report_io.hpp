#pragma once

// Record emission for the CLI. Documents are assembled as nlohmann::ordered_json
// and written by a small printer that renders every number with 17
// significant digits and non-finite values as the strings "inf", "-inf",
// "nan" (JSON has no literal for them).

#include <cmath>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "sincbounds/format.hpp"

namespace sincb::io {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kSchemaVersion = "1.0";

inline Json make_record(std::string_view command, Json payload) {
  Json rec;
  rec["schema_version"] = kSchemaVersion;
  rec["command"] = command;
  rec["payload"] = std::move(payload);
  return rec;
}

inline Json number(double v) {
  if (std::isfinite(v)) return v;
  return format_real(v);
}

namespace io_detail {

inline void write_string(std::ostream& os, const std::string& s) {
  // nlohmann's escaping for strings only
  os << Json(s).dump();
}

inline void write(std::ostream& os, const Json& j, int indent, int depth) {
  const auto pad = [&](int d) {
    if (indent > 0) os << '\n' << std::string(static_cast<std::size_t>(d * indent), ' ');
  };
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        os << "{}";
        return;
      }
      os << '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) os << ',';
        first = false;
        pad(depth + 1);
        write_string(os, it.key());
        os << (indent > 0 ? ": " : ":");
        write(os, it.value(), indent, depth + 1);
      }
      pad(depth);
      os << '}';
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        os << "[]";
        return;
      }
      os << '[';
      bool first = true;
      for (const auto& v : j) {
        if (!first) os << ',';
        first = false;
        pad(depth + 1);
        write(os, v, indent, depth + 1);
      }
      pad(depth);
      os << ']';
      return;
    }
    case Json::value_t::number_float: {
      const double v = j.get<double>();
      if (std::isfinite(v)) {
        std::string s = format_real(v);
        // keep floats recognisable as floats after a round trip
        if (s.find_first_of(".eE") == std::string::npos) s += ".0";
        os << s;
      } else {
        write_string(os, format_real(v));
      }
      return;
    }
    default:
      os << j.dump();
      return;
  }
}

}  // namespace io_detail

inline void write_json(std::ostream& os, const Json& j, int indent = 2) {
  io_detail::write(os, j, indent, 0);
  os << '\n';
}

inline std::string to_json_string(const Json& j, int indent = 2) {
  std::ostringstream os;
  write_json(os, j, indent);
  return os.str();
}

// Indented "key: value" rendering for humans.
inline void write_text(std::ostream& os, const Json& j, int depth = 0) {
  const std::string pad(static_cast<std::size_t>(depth * 2), ' ');
  const auto scalar = [](const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_float()) return format_real(v.get<double>());
    return v.dump();
  };
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (it.value().is_structured() && !it.value().empty()) {
        os << pad << it.key() << ":\n";
        write_text(os, it.value(), depth + 1);
      } else {
        os << pad << it.key() << ": " << scalar(it.value()) << '\n';
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_structured()) {
        os << pad << "-\n";
        write_text(os, v, depth + 1);
      } else {
        os << pad << "- " << scalar(v) << '\n';
      }
    }
  } else {
    os << pad << scalar(j) << '\n';
  }
}

// CSV with a fixed header; cells are numbers (17 digits) or bare strings.
class CsvWriter {
 public:
  CsvWriter(std::ostream& os, std::vector<std::string> header) : os_(os), width_(header.size()) {
    row_strings(header);
  }

  void row(const std::vector<double>& cells) {
    std::vector<std::string> s;
    s.reserve(cells.size());
    for (double v : cells) s.push_back(format_real(v));
    row_strings(s);
  }

  void row_strings(const std::vector<std::string>& cells) {
    if (cells.size() != width_) throw std::invalid_argument("csv row width mismatch");
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) os_ << ',';
      os_ << quote(cells[i]);
    }
    os_ << '\n';
  }

 private:
  static std::string quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
      if (c == '"') out += '"';
      out += c;
    }
    return out + '"';
  }

  std::ostream& os_;
  std::size_t width_;
};

inline const std::vector<std::string>& profile_header() {
  static const std::vector<std::string> h{"t", "value", "lower", "upper", "gap_lower", "gap_upper"};
  return h;
}

}  // namespace sincb::io
