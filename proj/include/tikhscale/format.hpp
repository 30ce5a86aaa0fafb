#pragma once

#include <cmath>
#include <cstdio>
#include <string>

namespace tikhscale {

// Full double precision (17 significant digits); infinities as "inf"/-inf".
inline std::string format_full(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace tikhscale
