#include "bicyl/lowdisc.hpp"

#include <bit>
#include <random>
#include <string>

#include "bicyl/errors.hpp"

namespace bicyl {

namespace {

// Primitive-polynomial data from the Joe-Kuo "new-joe-kuo-6.21201" table for
// the second and third Sobol dimensions. The first dimension is van der Corput.
struct DirectionSeed {
  int degree;
  std::uint32_t poly;  // interior coefficients a
  std::array<std::uint32_t, 2> m;
};

constexpr std::array<DirectionSeed, 2> kJoeKuo = {{
    {1, 0, {1, 0}},
    {2, 1, {1, 3}},
}};

constexpr double kScale = 1.0 / 4294967296.0;  // 2^-32

}  // namespace

SobolSampler::SobolSampler(int dimension, std::optional<std::uint64_t> scramble_seed)
    : dimension_(dimension), seed_(scramble_seed) {
  if (dimension < 2 || dimension > kMaxDimension) {
    throw ParameterError("Sobol dimension must be 2 or 3, got " + std::to_string(dimension));
  }
  for (int k = 0; k < kBits; ++k) {
    direction_[0][k] = std::uint32_t{1} << (kBits - 1 - k);
  }
  for (int j = 1; j < dimension_; ++j) {
    const auto& seed = kJoeKuo[static_cast<std::size_t>(j - 1)];
    auto& v = direction_[static_cast<std::size_t>(j)];
    const int s = seed.degree;
    for (int k = 0; k < s; ++k) {
      v[k] = seed.m[static_cast<std::size_t>(k)] << (kBits - 1 - k);
    }
    for (int k = s; k < kBits; ++k) {
      v[k] = v[k - s] ^ (v[k - s] >> s);
      for (int l = 1; l < s; ++l) {
        if ((seed.poly >> (s - 1 - l)) & 1U) {
          v[k] ^= v[k - l];
        }
      }
    }
  }
  if (seed_) {
    std::mt19937_64 rng(*seed_);
    for (int j = 0; j < dimension_; ++j) {
      shift_[static_cast<std::size_t>(j)] = static_cast<std::uint32_t>(rng() >> 32);
    }
  }
}

void SobolSampler::skip_to(std::uint64_t index) {
  if (index > (std::uint64_t{1} << kBits)) {
    throw ParameterError("Sobol index beyond 2^32");
  }
  state_.fill(0);
  cursor_ = index;
  if (index == 0) {
    return;
  }
  // state holds the point preceding `index`
  const std::uint64_t previous = index - 1;
  const std::uint64_t gray = previous ^ (previous >> 1);
  for (int k = 0; k < kBits; ++k) {
    if ((gray >> k) & 1U) {
      for (int j = 0; j < dimension_; ++j) {
        state_[static_cast<std::size_t>(j)] ^= direction_[static_cast<std::size_t>(j)][k];
      }
    }
  }
}

void SobolSampler::next(double* out) {
  if (cursor_ >= (std::uint64_t{1} << kBits)) {
    throw ParameterError("Sobol sequence exhausted (2^32 points)");
  }
  if (cursor_ > 0) {
    const int bit = std::countr_zero(cursor_);
    for (int j = 0; j < dimension_; ++j) {
      state_[static_cast<std::size_t>(j)] ^= direction_[static_cast<std::size_t>(j)][bit];
    }
  }
  for (int j = 0; j < dimension_; ++j) {
    const auto idx = static_cast<std::size_t>(j);
    out[j] = static_cast<double>(state_[idx] ^ shift_[idx]) * kScale;
  }
  ++cursor_;
}

PointBlock SobolSampler::random(std::uint64_t count) {
  PointBlock block(static_cast<Eigen::Index>(count), dimension_);
  for (Eigen::Index i = 0; i < block.rows(); ++i) {
    next(block.row(i).data());
  }
  return block;
}

PointBlock SobolSampler::random_base2(int m) {
  if (m < 1 || m > kMaxLog2) {
    throw ParameterError("Sobol block exponent m must lie in [1, " + std::to_string(kMaxLog2) +
                         "], got " + std::to_string(m));
  }
  return random(std::uint64_t{1} << m);
}

PointBlock sobol_points(int dimension, int m, std::optional<std::uint64_t> scramble_seed) {
  SobolSampler sampler(dimension, scramble_seed);
  return sampler.random_base2(m);
}

}  // namespace bicyl
