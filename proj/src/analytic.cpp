#include "bicyl/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "bicyl/errors.hpp"

namespace bicyl {

namespace {

constexpr double kCrossSectionSlack = 1e-12;

void require_depth(double delta, const char* what) {
  if (!(delta >= 0.0 && delta <= 1.0)) {
    throw DomainError(std::string(what) + ": delta must lie in [0, 1], got " +
                      std::to_string(delta));
  }
}

void require_height(double y_prime, double delta, const char* what) {
  require_depth(delta, what);
  if (!(y_prime >= 0.0 && y_prime <= 0.5 * delta)) {
    throw DomainError(std::string(what) + ": y' must lie in [0, delta/2]");
  }
}

double clamped_sqrt(double x, double slack) {
  if (x < 0.0 && x >= -slack) {
    return 0.0;
  }
  return std::sqrt(x);  // NaN below the slack, reported by the integrator
}

double clamped_acos(double x) {
  if (x > 1.0 && x <= 1.0 + kArccosSlack) {
    x = 1.0;
  } else if (x < -1.0 && x >= -1.0 - kArccosSlack) {
    x = -1.0;
  }
  return std::acos(x);
}

// arccos(q - sqrt(1 - x^2)): half-angle of the bottom shell below the top
// cylinder's surface.
struct UpperAngle {
  double q;
  double operator()(double x) const { return clamped_acos(q - std::sqrt(1.0 - x * x)); }
};

// arccos(q + sqrt(1 - x^2)): half-angle of the gap above the intersection.
struct LowerAngle {
  double q;
  double operator()(double x) const { return clamped_acos(q + std::sqrt(1.0 - x * x)); }
};

}  // namespace

VolumeCoefficients VolumeCoefficients::at(double delta) {
  require_depth(delta, "VolumeCoefficients");
  const double half = 0.5 * delta;
  return {1.0 - delta + 0.5 * delta * delta, half - half * half};
}

AreaCoefficients AreaCoefficients::at(double delta) {
  require_depth(delta, "AreaCoefficients");
  // x_tilde <= 1 analytically; keep rounding from pushing it past the unit disk.
  return {2.0 - 2.0 * delta, std::min(1.0, 2.0 * std::sqrt(delta - delta * delta))};
}

double cross_section_width(double y_prime, double delta) {
  require_height(y_prime, delta, "cross_section_width");
  const double s = 2.0 * y_prime - 1.0 + delta;
  return clamped_sqrt(1.0 - s * s, kCrossSectionSlack);
}

double cross_section_depth(double y_prime, double delta) {
  require_height(y_prime, delta, "cross_section_depth");
  const double s = 2.0 * y_prime + 1.0 - delta;
  return clamped_sqrt(1.0 - s * s, kCrossSectionSlack);
}

double volume_radicand(double y_prime, const VolumeCoefficients& c) {
  const double y2 = y_prime * y_prime;
  return y2 * y2 - c.q1 * y2 + c.q2 * c.q2;
}

ReducedResult reduced_volume_integral(double delta, const QuadratureSpec& spec) {
  require_depth(delta, "reduced_volume");
  const auto c = VolumeCoefficients::at(delta);
  const auto r = integrate(
      [&c](double y) { return clamped_sqrt(volume_radicand(y, c), kRadicandSlack); }, 0.0,
      0.5 * delta, spec);
  return {delta, 8.0 * r.value, 8.0 * r.err_estimate};
}

ReducedResult reduced_volume(double delta, const QuadratureSpec& spec) {
  require_depth(delta, "reduced_volume");
  if (delta == 0.0) {
    return {delta, 0.0, 0.0};
  }
  if (delta == 1.0) {
    return {delta, kSteinmetzVolume, 0.0};
  }
  return reduced_volume_integral(delta, spec);
}

ReducedResult reduced_area_shallow(double delta, const QuadratureSpec& spec) {
  require_depth(delta, "reduced_area_shallow");
  if (delta > 0.5) {
    throw DomainError("reduced_area_shallow: requires delta <= 1/2");
  }
  const auto c = AreaCoefficients::at(delta);
  const auto r = integrate(UpperAngle{c.q}, 0.0, c.x_tilde, spec);
  return {delta, 2.0 * r.value, 2.0 * r.err_estimate};
}

ReducedResult reduced_area_deep(double delta, const QuadratureSpec& spec) {
  require_depth(delta, "reduced_area_deep");
  if (delta < 0.5) {
    throw DomainError("reduced_area_deep: requires delta >= 1/2");
  }
  const auto c = AreaCoefficients::at(delta);
  const auto outer = integrate(UpperAngle{c.q}, 0.0, 1.0, spec);
  const auto gap = integrate(LowerAngle{c.q}, c.x_tilde, 1.0, spec);
  return {delta, 2.0 * (outer.value - gap.value), 2.0 * (outer.err_estimate + gap.err_estimate)};
}

ReducedResult reduced_area(double delta, const QuadratureSpec& spec) {
  require_depth(delta, "reduced_area");
  if (delta == 0.0) {
    return {delta, 0.0, 0.0};
  }
  if (delta == 1.0) {
    return {delta, kSteinmetzArea, 0.0};
  }
  return delta <= 0.5 ? reduced_area_shallow(delta, spec) : reduced_area_deep(delta, spec);
}

double approx_volume(double delta) {
  require_depth(delta, "approx_volume");
  return (1.0 - std::cos(delta * std::numbers::pi)) / 3.0;
}

double approx_area(double delta) {
  require_depth(delta, "approx_area");
  return 4.0 * std::sin(0.5 * delta * std::numbers::pi);
}

double relative_error_pct(double exact, double approx) {
  if (exact == 0.0) {
    throw DomainError("relative error undefined for a zero exact value");
  }
  return 100.0 * (exact - approx) / exact;
}

}  // namespace bicyl
