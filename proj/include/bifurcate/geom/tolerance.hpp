#pragma once

#include <algorithm>
#include <cmath>
#include <limits>

namespace bifurcate::geom {

inline constexpr double kRelativeTolerance = 1e-12;

/// |a-b| <= 1e-12 * max(1, |a|, |b|).
inline bool approx_equal(double a, double b) {
  if (a == b) return true;
  const double scale = std::max({1.0, std::fabs(a), std::fabs(b)});
  return std::fabs(a - b) <= kRelativeTolerance * scale;
}

/// Adjacent representable doubles. Critical values live in double precision,
/// so "strictly below c" is the same as "at most prev(c)".
inline double next_up(double x) { return std::nextafter(x, std::numeric_limits<double>::infinity()); }
inline double next_down(double x) { return std::nextafter(x, -std::numeric_limits<double>::infinity()); }

}  // namespace bifurcate::geom
