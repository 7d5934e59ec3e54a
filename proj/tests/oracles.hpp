// Test-only brute-force oracles. These deliberately avoid the library's
// quadrature and integrand code so they can check it independently.
#ifndef BICYL_TESTS_ORACLES_HPP
#define BICYL_TESTS_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>

namespace oracle {

/// Composite midpoint rule with `panels` panels.
template <class F>
double midpoint(F&& f, double lo, double hi, std::size_t panels) {
  const double h = (hi - lo) / static_cast<double>(panels);
  double sum = 0.0;
  for (std::size_t i = 0; i < panels; ++i) {
    sum += f(lo + (static_cast<double>(i) + 0.5) * h);
  }
  return sum * h;
}

/// Reduced volume from the slice geometry of the two cylinders with D = 1:
/// at height y the slice is a rectangle with half-extents taken directly
/// from each cylinder's circular cross-section.
inline double slice_volume(double delta, std::size_t panels = 400000) {
  const double r = 0.5;
  const double yb = 0.5 * delta - r;  // bottom axis (along X)
  const double yt = r - 0.5 * delta;  // top axis (along Z)
  auto area = [&](double y) {
    const double hz = std::sqrt(std::max(0.0, r * r - (y - yb) * (y - yb)));
    const double hx = std::sqrt(std::max(0.0, r * r - (y - yt) * (y - yt)));
    return 4.0 * hx * hz;
  };
  return midpoint(area, -0.5 * delta, 0.5 * delta, panels);
}

/// Reduced lateral area from the arc of the bottom cylinder's circle that lies
/// inside the top cylinder, at each station x along the bottom axis (D = 1);
/// doubled for the congruent top-cylinder shell.
inline double arc_area(double delta, std::size_t panels = 400000) {
  const double r = 0.5;
  const double yb = 0.5 * delta - r;
  const double yt = r - 0.5 * delta;
  auto arc = [&](double x) {
    const double s = std::sqrt(std::max(0.0, r * r - x * x));
    // y = yb + r cos(phi) must lie in [yt - s, yt + s]
    const double lo = std::clamp((yt - s - yb) / r, -1.0, 1.0);
    const double hi = std::clamp((yt + s - yb) / r, -1.0, 1.0);
    return r * 2.0 * (std::acos(lo) - std::acos(hi));
  };
  return 2.0 * midpoint(arc, -r, r, panels);
}

}  // namespace oracle

#endif  // BICYL_TESTS_ORACLES_HPP
