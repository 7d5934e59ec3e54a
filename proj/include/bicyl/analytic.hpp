#ifndef BICYL_ANALYTIC_HPP
#define BICYL_ANALYTIC_HPP

#include "bicyl/quadrature.hpp"

namespace bicyl {

/// Reduced (dimensionless) intersection measure at depth delta: volume / D^3
/// or lateral area / D^2.
struct ReducedResult {
  double delta = 0.0;
  double value = 0.0;
  double err_estimate = 0.0;
};

/// Coefficients of the quartic under the volume integrand,
/// y^4 - q1 y^2 + q2^2.
struct VolumeCoefficients {
  double q1;
  double q2;

  static VolumeCoefficients at(double delta);
};

/// Offset q = 2 - 2 delta of the arccos arguments and the reduced abscissa
/// x_tilde = 2 sqrt(delta - delta^2) where the top cylinder's shell meets the
/// bottom cylinder's apex line.
struct AreaCoefficients {
  double q;
  double x_tilde;

  static AreaCoefficients at(double delta);
};

inline constexpr double kSteinmetzVolume = 2.0 / 3.0;
inline constexpr double kSteinmetzArea = 4.0;

// Rounding slack absorbed at the analytic zeros of the integrands.
inline constexpr double kRadicandSlack = 1e-14;
inline constexpr double kArccosSlack = 1e-12;

/// Width w' = w / D of the rectangular cross-section at reduced height y'.
double cross_section_width(double y_prime, double delta);
/// Depth d' = d / D of the rectangular cross-section at reduced height y'.
double cross_section_depth(double y_prime, double delta);

/// y^4 - q1 y^2 + q2^2; equals (w' d' / 4)^2.
double volume_radicand(double y_prime, const VolumeCoefficients& c);

/// V'(delta) by quadrature; exact closed forms at delta = 0 and delta = 1.
ReducedResult reduced_volume(double delta, const QuadratureSpec& spec = {});

/// A'(delta) by quadrature, splitting at delta = 1/2 (the shallow branch owns
/// 1/2); exact closed forms at delta = 0 and delta = 1.
ReducedResult reduced_area(double delta, const QuadratureSpec& spec = {});

/// Shallow-branch area integral, valid for delta <= 1/2. No fast paths.
ReducedResult reduced_area_shallow(double delta, const QuadratureSpec& spec = {});
/// Deep-branch area integral, valid for delta >= 1/2. No fast paths.
ReducedResult reduced_area_deep(double delta, const QuadratureSpec& spec = {});
/// Volume integral without the closed-form shortcuts.
ReducedResult reduced_volume_integral(double delta, const QuadratureSpec& spec = {});

/// (1 - cos(delta pi)) / 3
double approx_volume(double delta);
/// 4 sin(delta pi / 2)
double approx_area(double delta);

/// 100 (exact - approx) / exact. Requires exact != 0.
double relative_error_pct(double exact, double approx);

}  // namespace bicyl

#endif  // BICYL_ANALYTIC_HPP
