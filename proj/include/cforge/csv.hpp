#pragma once

#include <cstdint>
#include <cstdio>
#include <string>

namespace cforge {

// All floating-point CSV output uses 9 significant digits so reruns diff
// cleanly.
inline std::string fmt9(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.9g", value);
  return buffer;
}

inline void csv_append(std::string& out, double value) { out += fmt9(value); }
inline void csv_append(std::string& out, bool value) { out += value ? '1' : '0'; }
inline void csv_append(std::string& out, int value) { out += std::to_string(value); }
inline void csv_append(std::string& out, std::int64_t value) { out += std::to_string(value); }
inline void csv_append(std::string& out, std::uint64_t value) { out += std::to_string(value); }
inline void csv_append(std::string& out, const char* value) { out += value; }

template <class First, class... Rest>
void csv_row(std::string& out, const First& first, const Rest&... rest) {
  csv_append(out, first);
  ((out += ',', csv_append(out, rest)), ...);
  out += '\n';
}

}  // namespace cforge
