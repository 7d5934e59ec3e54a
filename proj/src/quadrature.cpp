#include "bicyl/quadrature.hpp"

#include <array>
#include <mutex>
#include <numbers>
#include <vector>

namespace bicyl {

void QuadratureSpec::validate() const {
  if (!(rel_tol > 0.0) || !std::isfinite(rel_tol)) {
    throw ParameterError("quadrature rel_tol must be positive and finite");
  }
  if (!(abs_tol > 0.0) || !std::isfinite(abs_tol)) {
    throw ParameterError("quadrature abs_tol must be positive and finite");
  }
  if (max_levels < 1 || max_levels > kLevelLimit) {
    throw ParameterError("quadrature max_levels must lie in [1, " + std::to_string(kLevelLimit) +
                         "]");
  }
}

namespace detail {

namespace {

TanhSinhNode make_node(double t) {
  constexpr double half_pi = 0.5 * std::numbers::pi;
  const double u = half_pi * std::sinh(t);
  const double cosh_u = std::cosh(u);
  return {2.0 / (1.0 + std::exp(2.0 * u)), half_pi * std::cosh(t) / (cosh_u * cosh_u)};
}

std::vector<TanhSinhNode> build_level(int level) {
  std::vector<TanhSinhNode> nodes;
  if (level == 0) {
    for (int j = 0; j <= static_cast<int>(kTanhSinhWindow); ++j) {
      nodes.push_back(make_node(j));
    }
    return nodes;
  }
  const double step = std::ldexp(1.0, -level);
  const long count = static_cast<long>(kTanhSinhWindow / step);
  nodes.reserve(static_cast<std::size_t>(count / 2 + 1));
  for (long j = 1; j < count; j += 2) {
    nodes.push_back(make_node(static_cast<double>(j) * step));
  }
  return nodes;
}

}  // namespace

std::span<const TanhSinhNode> tanh_sinh_nodes(int level) {
  static std::array<std::once_flag, QuadratureSpec::kLevelLimit + 1> once;
  static std::array<std::vector<TanhSinhNode>, QuadratureSpec::kLevelLimit + 1> table;
  const auto idx = static_cast<std::size_t>(level);
  std::call_once(once.at(idx), [&] { table[idx] = build_level(level); });
  return table[idx];
}

}  // namespace detail
}  // namespace bicyl
