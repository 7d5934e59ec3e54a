#include "bicyl/qmc.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numbers>
#include <string>
#include <vector>

#include "bicyl/errors.hpp"
#include "bicyl/lowdisc.hpp"

namespace bicyl {

namespace {

enum class Stream : std::uint64_t { Volume = 1, SurfaceFirst = 2, SurfaceSecond = 3 };

// splitmix64 finaliser; gives each estimator its own reproducible scramble.
std::optional<std::uint64_t> stream_seed(const std::optional<std::uint64_t>& seed, Stream stream) {
  if (!seed) {
    return std::nullopt;
  }
  std::uint64_t z = *seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(stream);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Counts sample indices in [0, n) whose mapped point satisfies `hit`. Chunks
// are contiguous index ranges, each with its own sampler positioned by
// skip_to, and integer counts are summed, so the result does not depend on
// the worker count.
template <int Dim, class Hit>
std::uint64_t count_hits(std::uint64_t n, int threads, const std::optional<std::uint64_t>& seed,
                         const Hit& hit) {
  auto work = [&](std::uint64_t begin, std::uint64_t end) {
    SobolSampler sampler(Dim, seed);
    sampler.skip_to(begin);
    double s[Dim];
    std::uint64_t hits = 0;
    for (std::uint64_t i = begin; i < end; ++i) {
      sampler.next(s);
      hits += hit(s) ? 1U : 0U;
    }
    return hits;
  };
  const auto workers = static_cast<std::uint64_t>(std::max(1, threads));
  if (workers == 1 || n < 2 * workers) {
    return work(0, n);
  }
  std::vector<std::future<std::uint64_t>> parts;
  const std::uint64_t chunk = (n + workers - 1) / workers;
  for (std::uint64_t begin = 0; begin < n; begin += chunk) {
    parts.push_back(std::async(std::launch::async, work, begin, std::min(n, begin + chunk)));
  }
  std::uint64_t total = 0;
  for (auto& part : parts) {
    total += part.get();
  }
  return total;
}

template <int Dim, class Map>
Eigen::Matrix3Xd materialize(const QmcSpec& spec, Stream stream, const Map& map) {
  spec.validate();
  SobolSampler sampler(Dim, stream_seed(spec.scramble_seed, stream));
  const auto n = static_cast<Eigen::Index>(spec.samples());
  Eigen::Matrix3Xd points(3, n);
  double s[Dim];
  for (Eigen::Index i = 0; i < n; ++i) {
    sampler.next(s);
    points.col(i) = map(s);
  }
  return points;
}

}  // namespace

std::string_view to_string(Containment mode) {
  return mode == Containment::SegmentCapsule ? "capsule" : "strict";
}

Containment parse_containment(std::string_view name) {
  if (name == "capsule" || name == "segment-capsule") {
    return Containment::SegmentCapsule;
  }
  if (name == "strict" || name == "strict-finite") {
    return Containment::StrictFinite;
  }
  throw ParameterError("unknown containment mode '" + std::string(name) +
                       "' (expected capsule or strict)");
}

void QmcSpec::validate() const {
  if (log2_samples < kMinLog2 || log2_samples > kMaxLog2) {
    throw ParameterError("log2_samples must lie in [" + std::to_string(kMinLog2) + ", " +
                         std::to_string(kMaxLog2) + "], got " + std::to_string(log2_samples));
  }
  if (threads < 1) {
    throw ParameterError("threads must be at least 1");
  }
}

bool contains(const Cylinderd& c, const Vec3d& p, Containment mode) {
  if (mode == Containment::StrictFinite) {
    const double t = segment_parameter(p, c.a(), c.b());
    if (t < 0.0 || t > 1.0) {
      return false;
    }
  }
  return point_to_segment_distance(p, c.a(), c.b()) <= c.radius();
}

Vec3d map_to_interior(const Cylinderd& c, const Basis<double>& basis, double s0, double s1,
                      double s2) {
  const double radial = c.radius() * std::sqrt(s0);
  const double theta = 2.0 * std::numbers::pi * s1;
  return c.a() + (c.length() * s2) * basis.d +
         radial * (std::cos(theta) * basis.u + std::sin(theta) * basis.v);
}

Vec3d map_to_surface(const Cylinderd& c, const Basis<double>& basis, double s0, double s1) {
  const double theta = 2.0 * std::numbers::pi * s0;
  const double z = s1 * c.length();
  return c.a() + z * basis.d + c.radius() * std::cos(theta) * basis.u +
         c.radius() * std::sin(theta) * basis.v;
}

Eigen::Matrix3Xd sample_cylinder_interior(const Cylinderd& c, const QmcSpec& spec) {
  const auto basis = c.basis();
  return materialize<3>(spec, Stream::Volume,
                        [&](const double* s) { return map_to_interior(c, basis, s[0], s[1], s[2]); });
}

Eigen::Matrix3Xd sample_cylinder_surface(const Cylinderd& c, const QmcSpec& spec) {
  const auto basis = c.basis();
  return materialize<2>(spec, Stream::SurfaceFirst,
                        [&](const double* s) { return map_to_surface(c, basis, s[0], s[1]); });
}

VolumeEstimate estimate_intersection_volume(const Cylinderd& c1, const Cylinderd& c2,
                                            const QmcSpec& spec) {
  spec.validate();
  const auto basis = c1.basis();
  const std::uint64_t n = spec.samples();
  const auto hits = count_hits<3>(
      n, spec.threads, stream_seed(spec.scramble_seed, Stream::Volume), [&](const double* s) {
        return contains(c2, map_to_interior(c1, basis, s[0], s[1], s[2]), spec.containment);
      });
  VolumeEstimate est;
  est.n_used = n;
  est.hit_fraction = static_cast<double>(hits) / static_cast<double>(n);
  est.value = est.hit_fraction * c1.volume();
  return est;
}

AreaEstimate estimate_intersection_area(const Cylinderd& c1, const Cylinderd& c2,
                                        const QmcSpec& spec) {
  spec.validate();
  const std::uint64_t n = spec.samples();
  auto surface_fraction = [&](const Cylinderd& from, const Cylinderd& other, Stream stream) {
    const auto basis = from.basis();
    const auto hits = count_hits<2>(
        n, spec.threads, stream_seed(spec.scramble_seed, stream), [&](const double* s) {
          return contains(other, map_to_surface(from, basis, s[0], s[1]), spec.containment);
        });
    return static_cast<double>(hits) / static_cast<double>(n);
  };
  AreaEstimate est;
  est.n_used = n;
  est.hit_fraction_1 = surface_fraction(c1, c2, Stream::SurfaceFirst);
  est.hit_fraction_2 = surface_fraction(c2, c1, Stream::SurfaceSecond);
  est.value = est.hit_fraction_1 * c1.lateral_area() + est.hit_fraction_2 * c2.lateral_area();
  return est;
}

ReducedEstimate estimate_reduced(const ReducedConfig& cfg, const QmcSpec& spec) {
  const auto [bottom, top] = build_reduced_pair(cfg);
  ReducedEstimate est;
  est.volume = estimate_intersection_volume(bottom, top, spec);
  est.area = estimate_intersection_area(bottom, top, spec);
  const double d = cfg.diameter;
  est.v_prime = est.volume.value / (d * d * d);
  est.a_prime = est.area.value / (d * d);
  return est;
}

ReducedEstimate estimate_reduced(double delta, double diameter, const QmcSpec& spec) {
  ReducedConfig cfg;
  cfg.delta = delta;
  cfg.diameter = diameter;
  return estimate_reduced(cfg, spec);
}

}  // namespace bicyl
