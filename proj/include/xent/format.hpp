#pragma once

// Locale-independent numeric formatting for CSV and report output.

#include <cstdio>
#include <string>

namespace xent {

// 17 significant digits round-trip an IEEE-754 double exactly.
inline std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

}  // namespace xent
