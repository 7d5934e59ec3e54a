#ifndef BICYL_QMC_HPP
#define BICYL_QMC_HPP

#include <cstdint>
#include <optional>
#include <string_view>

#include <Eigen/Dense>

#include "bicyl/geometry.hpp"

namespace bicyl {

/// How a point is tested against the second cylinder.
///  - SegmentCapsule: distance to the axis segment <= r, i.e. membership in
///    the capsule around the axis (the classic clamped segment test).
///  - StrictFinite: additionally requires the axial projection to fall within
///    the segment, i.e. a flat-capped finite cylinder.
enum class Containment { SegmentCapsule, StrictFinite };

std::string_view to_string(Containment mode);
Containment parse_containment(std::string_view name);

struct QmcSpec {
  int log2_samples = 20;
  std::optional<std::uint64_t> scramble_seed;
  Containment containment = Containment::SegmentCapsule;
  /// Worker count for the hit loop. Never changes results.
  int threads = 1;

  static constexpr int kMinLog2 = 10;
  static constexpr int kMaxLog2 = 26;

  void validate() const;
  std::uint64_t samples() const { return std::uint64_t{1} << log2_samples; }
};

struct VolumeEstimate {
  double value = 0.0;         // length^3
  double hit_fraction = 0.0;  // of c1's interior samples inside c2
  std::uint64_t n_used = 0;
};

struct AreaEstimate {
  double value = 0.0;       // length^2
  double hit_fraction_1 = 0.0;  // c1 surface samples inside c2
  double hit_fraction_2 = 0.0;  // c2 surface samples inside c1
  std::uint64_t n_used = 0;     // per surface
};

struct ReducedEstimate {
  double v_prime = 0.0;
  double a_prime = 0.0;
  VolumeEstimate volume;
  AreaEstimate area;
};

bool contains(const Cylinderd& c, const Vec3d& p, Containment mode);

/// Interior point for unit-cube coordinates: the radial coordinate is
/// r sqrt(s0), so points are uniform over each cross-section.
Vec3d map_to_interior(const Cylinderd& c, const Basis<double>& basis, double s0, double s1,
                      double s2);
/// Lateral-surface point: theta = 2 pi s0, z = s1 L.
Vec3d map_to_surface(const Cylinderd& c, const Basis<double>& basis, double s0, double s1);

/// n = 2^log2_samples interior points of c, one per column.
Eigen::Matrix3Xd sample_cylinder_interior(const Cylinderd& c, const QmcSpec& spec);
/// n = 2^log2_samples lateral-surface points of c, one per column.
Eigen::Matrix3Xd sample_cylinder_surface(const Cylinderd& c, const QmcSpec& spec);

/// Hit-or-miss estimate of vol(c1 & c2) from samples of c1's interior.
VolumeEstimate estimate_intersection_volume(const Cylinderd& c1, const Cylinderd& c2,
                                            const QmcSpec& spec);
/// f1 * A1 + f2 * A2 where f_i is the fraction of cylinder i's lateral
/// surface samples lying inside the other cylinder.
AreaEstimate estimate_intersection_area(const Cylinderd& c1, const Cylinderd& c2,
                                        const QmcSpec& spec);

/// Both estimators on the reduced pair, normalised by D^3 and D^2.
ReducedEstimate estimate_reduced(const ReducedConfig& cfg, const QmcSpec& spec);
ReducedEstimate estimate_reduced(double delta, double diameter, const QmcSpec& spec);

}  // namespace bicyl

#endif  // BICYL_QMC_HPP
