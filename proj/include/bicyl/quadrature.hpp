#ifndef BICYL_QUADRATURE_HPP
#define BICYL_QUADRATURE_HPP

#include <algorithm>
#include <cmath>
#include <span>
#include <string>

#include "bicyl/errors.hpp"

namespace bicyl {

struct QuadratureSpec {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  int max_levels = 12;

  static constexpr int kLevelLimit = 20;

  void validate() const;
};

struct QuadratureResult {
  double value = 0.0;
  double err_estimate = 0.0;
  int levels = 0;
  long evaluations = 0;
};

namespace detail {

// One tanh-sinh node for t >= 0. `offset` is the distance from the nearer
// endpoint in units of the half-width, computed without cancellation so that
// abscissas next to an endpoint keep full relative precision.
struct TanhSinhNode {
  double offset;
  double weight;
};

inline constexpr double kTanhSinhWindow = 6.0;

// Nodes introduced at `level` (step 2^-level). Level 0 holds t = 0, 1, ..., 6;
// deeper levels hold the odd multiples of the step only. Built once per level
// and read-only afterwards.
std::span<const TanhSinhNode> tanh_sinh_nodes(int level);

}  // namespace detail

/// Tanh-sinh (double-exponential) quadrature of f over [lo, hi] with level
/// doubling. Integrable endpoint singularities are tolerated: f is never
/// evaluated at lo or hi themselves. The error estimate is the difference
/// between the last two levels.
template <class F>
QuadratureResult integrate(F&& f, double lo, double hi, const QuadratureSpec& spec = {}) {
  spec.validate();
  if (!std::isfinite(lo) || !std::isfinite(hi) || lo > hi) {
    throw DomainError("integrate: need finite bounds with lo <= hi");
  }
  QuadratureResult result;
  if (lo == hi) {
    return result;
  }

  const double half = 0.5 * (hi - lo);
  double sum = 0.0;
  double previous = 0.0;
  const int min_levels = std::min(2, spec.max_levels);

  auto eval = [&](double x) -> double {
    if (!(x > lo && x < hi)) {
      return 0.0;
    }
    const double y = f(x);
    ++result.evaluations;
    if (!std::isfinite(y)) {
      throw IntegrandDomainError("integrand is not finite at x = " + std::to_string(x));
    }
    return y;
  };

  for (int level = 0; level <= spec.max_levels; ++level) {
    for (const auto& node : detail::tanh_sinh_nodes(level)) {
      const double dx = half * node.offset;
      double contribution = eval(lo + dx);
      if (node.offset < 1.0) {
        contribution += eval(hi - dx);
      }
      sum += node.weight * contribution;
    }
    const double step = std::ldexp(1.0, -level);
    const double estimate = half * step * sum;
    result.levels = level;
    result.value = estimate;
    if (level > 0) {
      result.err_estimate = std::abs(estimate - previous);
      const double target = std::max(spec.abs_tol, spec.rel_tol * std::abs(estimate));
      if (level >= min_levels && result.err_estimate <= target) {
        return result;
      }
    }
    previous = estimate;
  }
  throw AccuracyError("integrate: tolerance not reached within " +
                          std::to_string(spec.max_levels) + " levels",
                      result.value, result.err_estimate);
}

}  // namespace bicyl

#endif  // BICYL_QUADRATURE_HPP
