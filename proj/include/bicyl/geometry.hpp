#ifndef BICYL_GEOMETRY_HPP
#define BICYL_GEOMETRY_HPP

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include <Eigen/Dense>

#include "bicyl/errors.hpp"

namespace bicyl {

template <typename Scalar>
using Vec3 = Eigen::Matrix<Scalar, 3, 1>;

using Vec3d = Vec3<double>;

template <typename Derived>
bool all_finite(const Eigen::MatrixBase<Derived>& v) {
  return v.array().isFinite().all();
}

/// Parameter of the orthogonal projection of p onto the line through a and b,
/// measured so that 0 is a and 1 is b. Not clamped.
template <typename Scalar>
Scalar segment_parameter(const Vec3<Scalar>& p, const Vec3<Scalar>& a, const Vec3<Scalar>& b) {
  const Vec3<Scalar> ab = b - a;
  const Scalar ab2 = ab.squaredNorm();
  if (!(ab2 > Scalar(0))) {
    throw InvalidCylinder("invalid cylinder axis: segment endpoints coincide");
  }
  return (p - a).dot(ab) / ab2;
}

/// Euclidean distance from p to the closest point of segment [a, b].
template <typename Scalar>
Scalar point_to_segment_distance(const Vec3<Scalar>& p, const Vec3<Scalar>& a,
                                 const Vec3<Scalar>& b) {
  const Scalar t = std::clamp(segment_parameter(p, a, b), Scalar(0), Scalar(1));
  const Vec3<Scalar> closest = a + t * (b - a);
  return (p - closest).norm();
}

/// Distance from p to the infinite line through a and b.
template <typename Scalar>
Scalar point_to_line_distance(const Vec3<Scalar>& p, const Vec3<Scalar>& a,
                              const Vec3<Scalar>& b) {
  const Scalar t = segment_parameter(p, a, b);
  return (p - (a + t * (b - a))).norm();
}

/// Right-handed orthonormal frame (u, v, d) with d along the given direction.
template <typename Scalar>
struct Basis {
  Vec3<Scalar> u;
  Vec3<Scalar> v;
  Vec3<Scalar> d;
};

// Directions within this distance of +Z or -Z take u from the X axis instead
// of the (ill-conditioned) cross product with Z.
inline constexpr double kPolarTolerance = 1e-9;

template <typename Scalar>
Basis<Scalar> orthonormal_basis(const Vec3<Scalar>& direction) {
  const Scalar len = direction.norm();
  if (!(len > Scalar(0)) || !std::isfinite(len)) {
    throw InvalidCylinder("invalid cylinder axis: zero or non-finite direction");
  }
  Basis<Scalar> basis;
  basis.d = direction / len;
  const Vec3<Scalar> z = Vec3<Scalar>::UnitZ();
  const bool polar = (basis.d - z).cwiseAbs().maxCoeff() <= Scalar(kPolarTolerance) ||
                     (basis.d + z).cwiseAbs().maxCoeff() <= Scalar(kPolarTolerance);
  if (polar) {
    // Gram-Schmidt on X; exactly (1, 0, 0) when d is exactly +-Z.
    const Vec3<Scalar> x = Vec3<Scalar>::UnitX();
    basis.u = (x - x.dot(basis.d) * basis.d).normalized();
  } else {
    basis.u = basis.d.cross(z).normalized();
  }
  basis.v = basis.d.cross(basis.u);
  return basis;
}

/// Finite right circular cylinder given by its axis segment and radius.
template <typename Scalar>
class Cylinder {
 public:
  Cylinder(const Vec3<Scalar>& a, const Vec3<Scalar>& b, Scalar radius) : a_(a), b_(b), r_(radius) {
    if (!all_finite(a_) || !all_finite(b_)) {
      throw InvalidCylinder("invalid cylinder: non-finite endpoint");
    }
    if (!((b_ - a_).squaredNorm() > Scalar(0))) {
      throw InvalidCylinder("invalid cylinder axis: endpoints a and b coincide");
    }
    if (!(r_ > Scalar(0)) || !std::isfinite(r_)) {
      throw InvalidCylinder("invalid cylinder: radius r must be positive and finite");
    }
  }

  const Vec3<Scalar>& a() const { return a_; }
  const Vec3<Scalar>& b() const { return b_; }
  Scalar radius() const { return r_; }

  Vec3<Scalar> axis() const { return b_ - a_; }
  Scalar length() const { return axis().norm(); }
  Basis<Scalar> basis() const { return orthonormal_basis<Scalar>(axis()); }

  Scalar volume() const { return std::numbers::pi_v<Scalar> * r_ * r_ * length(); }
  Scalar lateral_area() const { return Scalar(2) * std::numbers::pi_v<Scalar> * r_ * length(); }

  /// Applies x -> scale * R x + t to both endpoints, scaling the radius by |scale|.
  template <typename Rotation>
  Cylinder transformed(const Rotation& rotation, const Vec3<Scalar>& translation,
                       Scalar scale = Scalar(1)) const {
    return Cylinder(scale * (rotation * a_) + translation, scale * (rotation * b_) + translation,
                    std::abs(scale) * r_);
  }

 private:
  Vec3<Scalar> a_;
  Vec3<Scalar> b_;
  Scalar r_;
};

using Cylinderd = Cylinder<double>;

/// Orthogonal, equal-diameter configuration described by the intersection
/// depth delta = H / D.
struct ReducedConfig {
  double delta = 1.0;
  double diameter = 1.0;
  double length_factor = 4.0;

  void validate() const {
    if (!(delta >= 0.0 && delta <= 1.0)) {
      throw DomainError("intersection depth delta must lie in [0, 1], got " + std::to_string(delta));
    }
    if (!(diameter > 0.0) || !std::isfinite(diameter)) {
      throw DomainError("diameter must be positive and finite");
    }
    if (!(length_factor >= 2.0) || !std::isfinite(length_factor)) {
      throw DomainError("length_factor must be at least 2");
    }
  }
};

/// Bottom cylinder along X and top cylinder along Z, both of radius D/2 and
/// length length_factor * D, centred over the origin. Their overlap spans
/// y in [-H/2, H/2].
inline std::pair<Cylinderd, Cylinderd> build_reduced_pair(const ReducedConfig& cfg) {
  cfg.validate();
  const double radius = 0.5 * cfg.diameter;
  const double height = cfg.delta * cfg.diameter;
  const double half_len = 0.5 * cfg.length_factor * cfg.diameter;
  const double y_bottom = 0.5 * height - radius;
  const double y_top = radius - 0.5 * height;
  Cylinderd bottom(Vec3d(-half_len, y_bottom, 0.0), Vec3d(half_len, y_bottom, 0.0), radius);
  Cylinderd top(Vec3d(0.0, y_top, -half_len), Vec3d(0.0, y_top, half_len), radius);
  return {bottom, top};
}

}  // namespace bicyl

#endif  // BICYL_GEOMETRY_HPP
