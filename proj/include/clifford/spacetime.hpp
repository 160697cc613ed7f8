#pragma once

#include <array>

namespace clifford {

/// Event (t, x) with c = 1.  Axis 0 is time, axes 1..3 are space.
struct SpacetimePoint {
  double t = 0.0;
  std::array<double, 3> x{};
};

/// pt displaced by dh along the given axis (0 = t, 1..3 = x components).
inline SpacetimePoint shifted(SpacetimePoint pt, int axis, double dh) {
  if (axis == 0) {
    pt.t += dh;
  } else {
    pt.x[static_cast<std::size_t>(axis - 1)] += dh;
  }
  return pt;
}

}  // namespace clifford
