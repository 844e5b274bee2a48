#pragma once

#include <charconv>
#include <string>
#include <string_view>

namespace corekit {

// Shortest round-trip decimal form: 4.0 -> "4", 2.5 -> "2.5".
inline std::string format_number(double value) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

inline std::string ascii_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

}  // namespace corekit
