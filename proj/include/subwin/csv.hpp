// csv.hpp -- RFC-4180 field escaping.
#pragma once

#include <string>
#include <string_view>

namespace subwin {

// Quotes a field when it contains a comma, quote, CR or LF; doubles
// embedded quotes. Records are terminated with CRLF by the writers.
inline std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
  std::string out;
  out.reserve(s.size() + 2);
  out.push_back('"');
  for (char c : s) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace subwin
