// Helpers shared by the unit suites.

#pragma once

#include <algorithm>
#include <cmath>

namespace testsup {

// Relative deviation with an optional absolute floor on the scale, so that
// comparisons near a zero of the quantity do not divide noise by noise.
inline double rel_dev(double x, double y, double floor = 0.0) {
  const double d = std::abs(x - y);
  const double s = std::max({std::abs(x), std::abs(y), floor});
  return s == 0.0 ? d : d / s;
}

}  // namespace testsup
