#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bicyl/geometry.hpp"

using namespace bicyl;

TEST_CASE("point_to_segment_distance: worked cases") {
  const Vec3d a(0, 0, 0);
  const Vec3d b(1, 0, 0);
  CHECK(point_to_segment_distance(Vec3d(0.5, 1, 0), a, b) == 1.0);
  CHECK(point_to_segment_distance(Vec3d(2, 0, 0), a, b) == 1.0);
  CHECK(point_to_segment_distance(Vec3d(-3, 4, 0), a, b) == 5.0);
}

TEST_CASE("point_to_segment_distance rejects a degenerate segment") {
  const Vec3d a(1, 2, 3);
  CHECK_THROWS_AS(point_to_segment_distance(Vec3d(0, 0, 0), a, a), InvalidCylinder);
}

TEST_CASE("point_to_segment_distance properties") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  auto rand_vec = [&] { return Vec3d(u(rng), u(rng), u(rng)); };
  for (int i = 0; i < 500; ++i) {
    const Vec3d p = rand_vec();
    const Vec3d a = rand_vec();
    const Vec3d b = rand_vec();
    const double d = point_to_segment_distance(p, a, b);
    CHECK(d >= 0.0);
    CHECK(d == doctest::Approx(point_to_segment_distance(p, b, a)).epsilon(1e-12));
    CHECK(d <= std::min((p - a).norm(), (p - b).norm()) + 1e-12);

    const Eigen::Matrix3d rot =
        Eigen::AngleAxisd(u(rng), rand_vec().normalized()).toRotationMatrix();
    const Vec3d t = rand_vec();
    const double moved = point_to_segment_distance<double>(rot * p + t, rot * a + t, rot * b + t);
    CHECK(std::abs(moved - d) <= 1e-12);
  }
}

TEST_CASE("point_to_segment_distance works in single precision too") {
  const Vec3<float> a(0, 0, 0);
  const Vec3<float> b(1, 0, 0);
  CHECK(point_to_segment_distance(Vec3<float>(-3, 4, 0), a, b) == 5.0f);
}

TEST_CASE("orthonormal_basis") {
  SUBCASE("axis aligned") {
    const auto basis = orthonormal_basis<double>(Vec3d(0, 0, 1));
    CHECK(basis.d == Vec3d(0, 0, 1));
    CHECK(basis.u == Vec3d(1, 0, 0));
    CHECK(basis.v == Vec3d(0, 1, 0));
  }
  SUBCASE("scale invariant") {
    const auto b1 = orthonormal_basis<double>(Vec3d(0, 0, 1));
    const auto b2 = orthonormal_basis<double>(Vec3d(0, 0, 2));
    CHECK(b1.u == b2.u);
    CHECK(b1.v == b2.v);
    CHECK(b1.d == b2.d);
  }
  SUBCASE("negative Z uses the X tie-break") {
    const auto basis = orthonormal_basis<double>(Vec3d(0, 0, -3));
    CHECK(basis.u == Vec3d(1, 0, 0));
    CHECK(basis.u.cross(basis.v).isApprox(basis.d, 1e-15));
  }
  SUBCASE("general direction is orthonormal and right-handed") {
    std::mt19937_64 rng(11);
    std::normal_distribution<double> n(0.0, 1.0);
    std::vector<Vec3d> dirs = {Vec3d(1, 1, 0), Vec3d(0, 0, 1) + Vec3d(1e-10, 0, 0),
                               Vec3d(1e-7, 0, 1)};
    for (int i = 0; i < 200; ++i) {
      dirs.emplace_back(n(rng), n(rng), n(rng));
    }
    for (const auto& dir : dirs) {
      const auto b = orthonormal_basis<double>(dir);
      CHECK(std::abs(b.u.dot(b.v)) < 1e-12);
      CHECK(std::abs(b.u.dot(b.d)) < 1e-12);
      CHECK(std::abs(b.v.dot(b.d)) < 1e-12);
      CHECK(b.u.norm() == doctest::Approx(1.0).epsilon(1e-14));
      CHECK(b.v.norm() == doctest::Approx(1.0).epsilon(1e-14));
      CHECK((b.u.cross(b.v) - b.d).norm() < 1e-12);
    }
  }
  SUBCASE("deterministic") {
    const Vec3d dir(0.3, -0.2, 0.9);
    const auto b1 = orthonormal_basis<double>(dir);
    const auto b2 = orthonormal_basis<double>(dir);
    CHECK(b1.u == b2.u);
    CHECK(b1.v == b2.v);
  }
  CHECK_THROWS_AS(orthonormal_basis<double>(Vec3d::Zero()), InvalidCylinder);
}

TEST_CASE("Cylinder validates its invariants") {
  CHECK_THROWS_AS(Cylinderd(Vec3d(1, 1, 1), Vec3d(1, 1, 1), 1.0), InvalidCylinder);
  CHECK_THROWS_AS(Cylinderd(Vec3d(0, 0, 0), Vec3d(1, 0, 0), 0.0), InvalidCylinder);
  CHECK_THROWS_AS(Cylinderd(Vec3d(0, 0, 0), Vec3d(1, 0, 0), -1.0), InvalidCylinder);
  CHECK_THROWS_AS(Cylinderd(Vec3d(0, std::nan(""), 0), Vec3d(1, 0, 0), 1.0), InvalidCylinder);
  const Cylinderd c(Vec3d(0, 0, 0), Vec3d(0, 0, 2), 0.5);
  CHECK(c.length() == 2.0);
  CHECK(c.volume() == doctest::Approx(std::numbers::pi * 0.25 * 2.0));
  CHECK(c.lateral_area() == doctest::Approx(2.0 * std::numbers::pi * 0.5 * 2.0));
}

TEST_CASE("build_reduced_pair") {
  SUBCASE("full intersection") {
    const auto [bottom, top] = build_reduced_pair({1.0, 1.0, 4.0});
    CHECK(bottom.a().y() == 0.0);
    CHECK(top.a().y() == 0.0);
    CHECK(bottom.radius() == 0.5);
    CHECK(top.radius() == 0.5);
  }
  SUBCASE("tangent") {
    const auto [bottom, top] = build_reduced_pair({0.0, 1.0, 4.0});
    CHECK(bottom.a().y() == -0.5);
    CHECK(top.a().y() == 0.5);
  }
  SUBCASE("half depth, D = 2") {
    const auto [bottom, top] = build_reduced_pair({0.5, 2.0, 4.0});
    CHECK(bottom.a().y() == -0.5);
    CHECK(bottom.b().y() == -0.5);
    CHECK(top.a().y() == 0.5);
    CHECK(bottom.radius() == 1.0);
    CHECK(bottom.length() == 8.0);
    CHECK(top.length() == 8.0);
  }
  SUBCASE("axes orthogonal and gap D - H for all depths") {
    for (int i = 0; i <= 100; ++i) {
      const double delta = i / 100.0;
      for (double diameter : {0.5, 1.0, 3.0}) {
        const auto [bottom, top] = build_reduced_pair({delta, diameter, 4.0});
        CHECK(bottom.axis().dot(top.axis()) == 0.0);
        const double gap = top.a().y() - bottom.a().y();
        CHECK(std::abs(gap - (diameter - delta * diameter)) <= 1e-12);
        // overlap region centred on the origin
        CHECK(bottom.a().x() + bottom.b().x() == 0.0);
        CHECK(top.a().z() + top.b().z() == 0.0);
      }
    }
  }
  SUBCASE("invalid configurations") {
    CHECK_THROWS_AS(build_reduced_pair({-0.1, 1.0, 4.0}), DomainError);
    CHECK_THROWS_AS(build_reduced_pair({1.1, 1.0, 4.0}), DomainError);
    CHECK_THROWS_AS(build_reduced_pair({0.5, 0.0, 4.0}), DomainError);
    CHECK_THROWS_AS(build_reduced_pair({0.5, 1.0, 1.5}), DomainError);
  }
}
