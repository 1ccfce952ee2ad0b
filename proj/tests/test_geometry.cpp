#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "birot/geometry.hpp"
#include "support/sampling.hpp"

using namespace birot;

namespace {

bool close(double a, double b, double tol) { return std::fabs(a - b) <= tol; }

bool close(const Vec3& a, const Vec3& b, double tol) {
  return close(a.x, b.x, tol) && close(a.y, b.y, tol) && close(a.z, b.z, tol);
}

}  // namespace

TEST_CASE("rotations are right-handed about their axes") {
  CHECK(close(rotate_z({1, 0, 0}, kPi / 2), {0, 1, 0}, 1e-15));
  CHECK(close(rotate_z({0, 1, 0}, kPi / 2), {-1, 0, 0}, 1e-15));
  CHECK(close(rotate_x({0, 1, 0}, kPi / 2), {0, 0, 1}, 1e-15));
  CHECK(close(rotate_x({0, 0, 1}, kPi / 2), {0, -1, 0}, 1e-15));
  // z-rotation leaves z alone, x-rotation leaves x alone
  auto rng = testing::make_rng(11);
  for (int i = 0; i < 100; ++i) {
    const Vec3 p = testing::hemisphere_point(rng);
    CHECK(rotate_z(p, 0.7).z == p.z);
    CHECK(rotate_x(p, 0.7).x == p.x);
    CHECK(close(norm(rotate_z(p, 2.9)), 1.0, 1e-14));
  }
}

TEST_CASE("geodesic distance") {
  CHECK(close(geodesic_distance({1, 0, 0}, {1, 0, 0}), 0.0, 1e-15));
  CHECK(close(geodesic_distance({1, 0, 0}, {-1, 0, 0}), kPi, 1e-15));
  CHECK(close(geodesic_distance({1, 0, 0}, {0, 1, 0}), kPi / 2, 1e-15));
  // clamp keeps rounding past |dot| = 1 finite
  const Vec3 p = normalized({0.3, -0.4, 0.866});
  CHECK(geodesic_distance(p, p) == 0.0);
}

TEST_CASE("plane distance: bottom pole against a tilted equator plane") {
  // n is the first-rotation image of the y-axis for a beta = pi/3 tilt
  const Vec3 n{0.0, std::cos(kPi / 3), -std::sin(kPi / 3)};
  CHECK(close(plane_distance({0, -1, 0}, n), kPi / 6, 1e-12));
}

TEST_CASE("plane distance equals the tilt of rings about the plane") {
  auto rng = testing::make_rng(22);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    const Vec3 n = normalized(testing::hemisphere_point(rng));
    // orthonormal frame spanning the plane
    const Vec3 seed = std::fabs(n.x) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
    Vec3 e1 = {seed.y * n.z - seed.z * n.y, seed.z * n.x - seed.x * n.z,
               seed.x * n.y - seed.y * n.x};
    e1 = normalized(e1);
    const Vec3 e2 = {n.y * e1.z - n.z * e1.y, n.z * e1.x - n.x * e1.z,
                     n.x * e1.y - n.y * e1.x};
    const double gamma = 0.001 + 1.5 * unit(rng);  // tilt in (0, pi/2)
    const double t = kTwoPi * unit(rng);
    const Vec3 p{std::sin(gamma) * n.x + std::cos(gamma) * (std::cos(t) * e1.x + std::sin(t) * e2.x),
                 std::sin(gamma) * n.y + std::cos(gamma) * (std::cos(t) * e1.y + std::sin(t) * e2.y),
                 std::sin(gamma) * n.z + std::cos(gamma) * (std::cos(t) * e1.z + std::sin(t) * e2.z)};
    CHECK(close(plane_distance(p, n), gamma, 1e-12));
    const Vec3 on_plane{std::cos(t) * e1.x + std::sin(t) * e2.x,
                        std::cos(t) * e1.y + std::sin(t) * e2.y,
                        std::cos(t) * e1.z + std::sin(t) * e2.z};
    CHECK(close(plane_distance(on_plane, n), 0.0, 1e-12));
  }
}

TEST_CASE("lambert projection: fixed points of the frame") {
  const DiskCoord center = lambert_project({0, -1, 0});
  CHECK(close(center.u, 0.0, 1e-15));
  CHECK(close(center.v, 0.0, 1e-15));
  const DiskCoord px = lambert_project({1, 0, 0});
  CHECK(close(px.u, std::sqrt(2.0), 1e-12));
  CHECK(close(px.v, 0.0, 1e-12));
  const DiskCoord pz = lambert_project({0, 0, 1});
  CHECK(close(pz.u, 0.0, 1e-12));
  CHECK(close(pz.v, std::sqrt(2.0), 1e-12));
  const DiskCoord mz = lambert_project({0, 0, -1});
  CHECK(close(mz.v, -std::sqrt(2.0), 1e-12));
}

TEST_CASE("lambert projection and inverse are mutually inverse") {
  auto rng = testing::make_rng(33);
  for (int i = 0; i < 2000; ++i) {
    const Vec3 p = testing::hemisphere_point(rng);
    const DiskCoord c = lambert_project(p);
    CHECK(c.u * c.u + c.v * c.v <= kDiskRadius2 + 1e-12);
    CHECK(close(lambert_inverse(c), p, 1e-12));

    const DiskCoord d = testing::disk_point(rng);
    const Vec3 q = lambert_inverse(d);
    CHECK(close(norm(q), 1.0, 1e-12));
    CHECK(q.y <= 0.0);
    const DiskCoord back = lambert_project(q);
    CHECK(close(back.u, d.u, 1e-12));
    CHECK(close(back.v, d.v, 1e-12));
  }
  CHECK_THROWS_AS(lambert_inverse({1.5, 1.0}), std::domain_error);
}

TEST_CASE("lambert projection is equal-area (seeded Monte Carlo)") {
  // Uniform samples in the disk must land in any spherical cap with
  // frequency area/(2*pi), within 3 binomial standard errors.
  const int n = 1000000;
  struct Cap {
    Vec3 center;
    double radius;
  };
  const Cap caps[] = {
      {{0, -1, 0}, 0.5},
      {lambert_inverse({0.7, -0.4}), 0.35},
      {lambert_inverse({-0.7, 0.55}), 0.25},
  };
  auto rng = testing::make_rng(44);
  int hits[3] = {0, 0, 0};
  for (int i = 0; i < n; ++i) {
    const Vec3 p = lambert_inverse(testing::disk_point(rng));
    for (int c = 0; c < 3; ++c)
      if (geodesic_distance(p, caps[c].center) <= caps[c].radius) ++hits[c];
  }
  for (int c = 0; c < 3; ++c) {
    // cap must sit wholly inside the hemisphere for the comparison to hold
    REQUIRE(std::asin(-caps[c].center.y) > caps[c].radius);
    const double expect = 1.0 - std::cos(caps[c].radius);  // area / (2*pi)
    const double got = double(hits[c]) / n;
    const double sigma = std::sqrt(expect * (1.0 - expect) / n);
    CHECK(std::fabs(got - expect) <= 3.0 * sigma);
  }
}

TEST_CASE("equator angle addresses the boundary circle") {
  CHECK(close(equator_angle({1, 0, 0}), 0.0, 1e-15));
  CHECK(close(equator_angle({0, 0, 1}), kPi / 2, 1e-15));
  CHECK(close(equator_angle({-1, 0, 0}), kPi, 1e-15));
  CHECK(close(equator_angle({0, 0, -1}), 1.5 * kPi, 1e-15));
  // wrap stays inside [0, 2*pi)
  auto rng = testing::make_rng(55);
  for (int i = 0; i < 1000; ++i) {
    const Vec3 p = testing::hemisphere_point(rng);
    const double a = equator_angle(p);
    CHECK(a >= 0.0);
    CHECK(a < kTwoPi);
  }
  CHECK_THROWS_AS(equator_angle({0, -1, 0}), std::domain_error);
}
