#ifndef BICYL_LOWDISC_HPP
#define BICYL_LOWDISC_HPP

#include <array>
#include <cstdint>
#include <optional>

#include <Eigen/Dense>

namespace bicyl {

/// Row-major block of quasi-random points, one point per row.
using PointBlock = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Sobol sequence in 2 or 3 dimensions (Joe-Kuo direction numbers), emitted in
/// Gray-code order with 32-bit resolution. With a seed, every coordinate is
/// XOR-ed with a seeded 32-bit digital shift, which preserves the (t, m, s)-net
/// structure of each power-of-two block.
class SobolSampler {
 public:
  static constexpr int kMaxDimension = 3;
  static constexpr int kBits = 32;
  static constexpr int kMaxLog2 = 30;

  explicit SobolSampler(int dimension, std::optional<std::uint64_t> scramble_seed = std::nullopt);

  int dimension() const { return dimension_; }
  std::optional<std::uint64_t> scramble_seed() const { return seed_; }
  std::uint64_t cursor() const { return cursor_; }

  /// Next 2^m points; on a fresh sampler these are the first 2^m points.
  PointBlock random_base2(int m);

  /// Next `count` points (any count); advances the cursor.
  PointBlock random(std::uint64_t count);

  /// Writes the next point into `out` (dimension() entries) and advances.
  void next(double* out);

  /// Repositions the cursor so the next point emitted is point `index`.
  void skip_to(std::uint64_t index);

 private:
  int dimension_;
  std::optional<std::uint64_t> seed_;
  std::uint64_t cursor_ = 0;
  std::array<std::array<std::uint32_t, kBits>, kMaxDimension> direction_{};
  std::array<std::uint32_t, kMaxDimension> shift_{};
  std::array<std::uint32_t, kMaxDimension> state_{};
};

/// First 2^m points of the (optionally shifted) Sobol sequence.
PointBlock sobol_points(int dimension, int m, std::optional<std::uint64_t> scramble_seed = std::nullopt);

}  // namespace bicyl

#endif  // BICYL_LOWDISC_HPP
