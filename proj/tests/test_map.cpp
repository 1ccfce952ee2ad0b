#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "birot/map.hpp"
#include "support/sampling.hpp"

using namespace birot;

namespace {

bool close(double a, double b, double tol) { return std::fabs(a - b) <= tol; }

bool close(const Vec3& a, const Vec3& b, double tol) {
  return close(a.x, b.x, tol) && close(a.y, b.y, tol) && close(a.z, b.z, tol);
}

const Protocol kQuarter{kPi / 2, kPi / 2};

}  // namespace

TEST_CASE("forward: hand-composed quarter-turn example") {
  // (0.48,-0.6,0.64) under (pi/2, pi/2): the z-rotation lands at
  // (0.6,0.48,0.64), above the equator, so the fold brings it to
  // (-0.6,-0.48,0.64); the x-rotation lands below at (-0.6,-0.64,-0.48).
  const PwiMap map(kQuarter);
  const Vec3 p{0.48, -0.6, 0.64};
  const StepTrace t = map.forward(p);
  CHECK(close(t.intermediate, {-0.6, -0.48, 0.64}, 1e-12));
  CHECK(close(t.final, {-0.6, -0.64, -0.48}, 1e-12));
  CHECK(t.atom == AtomId::P2);
  CHECK(close(map.inverse(t.final), p, 1e-12));
}

TEST_CASE("forward: atoms of the quarter-turn protocol are the xz quadrants") {
  // For (pi/2, pi/2) the first fold fires iff x > 0 and the second iff z < 0.
  const PwiMap map(kQuarter);
  auto mk = [](double x, double z) {
    return Vec3{x, -std::sqrt(1.0 - x * x - z * z), z};
  };
  CHECK(map.forward(mk(-0.6, 0.4)).atom == AtomId::P1);
  CHECK(map.forward(mk(0.6, 0.4)).atom == AtomId::P2);
  CHECK(map.forward(mk(-0.6, -0.4)).atom == AtomId::P3);
  CHECK(map.forward(mk(0.6, -0.4)).atom == AtomId::P4);
}

TEST_CASE("forward: exact equator landings are rejected") {
  const PwiMap map(kQuarter);
  // engineered so the rotated y, c*0.8c - 0.8c with s == 1, cancels to
  // exactly 0.0 in double arithmetic
  const double c = std::cos(kPi / 2);
  const Vec3 p{0.8 * c, -0.8, 0.6};
  CHECK_THROWS_AS(map.forward(p), BoundaryError);
}

TEST_CASE("inverse round-trips forward across protocols") {
  const Protocol protocols[] = {
      kQuarter,
      Protocol::from_degrees(45, 45),
      Protocol::from_degrees(57, 32.75),
      Protocol::from_degrees(1, 179),
      Protocol::from_degrees(120, 60),
      Protocol::from_degrees(0, 60),
      Protocol::from_degrees(60, 0),
  };
  auto rng = testing::make_rng(101);
  for (const Protocol& prot : protocols) {
    const PwiMap map(prot);
    for (int i = 0; i < 500; ++i) {
      const Vec3 p = testing::hemisphere_point(rng);
      const StepTrace t = map.forward(p);
      CHECK(close(norm(t.final), 1.0, 1e-12));
      CHECK(t.final.y < 0.0);
      CHECK(close(map.inverse(t.final), p, 1e-12));
      const Vec3 q = map.inverse(p);
      CHECK(close(map.forward(q).final, p, 1e-12));
    }
  }
}

TEST_CASE("forward agrees with the rotation-matrix oracle") {
  auto rng = testing::make_rng(202);
  std::uniform_real_distribution<double> angle(0.0, kPi - 1e-9);
  for (int pr = 0; pr < 20; ++pr) {
    const Protocol prot{angle(rng), angle(rng)};
    const PwiMap map(prot);
    for (int i = 0; i < 2000; ++i) {
      const Vec3 p = testing::hemisphere_point(rng);
      const Vec3 want = stepwise_oracle_map(p, prot);
      const Vec3 got = map.forward(p).final;
      CHECK(close(got, want, 1e-12));
    }
  }
}

TEST_CASE("cutline distances: first line is the pulled-back equator plane") {
  auto rng = testing::make_rng(303);
  const Protocol protocols[] = {kQuarter, Protocol::from_degrees(45, 45),
                                Protocol::from_degrees(57, 32.75),
                                Protocol::from_degrees(150, 20)};
  for (const Protocol& prot : protocols) {
    const PwiMap map(prot);
    const Vec3 n1{std::sin(prot.alpha), std::cos(prot.alpha), 0.0};
    for (int i = 0; i < 300; ++i) {
      const Vec3 p = testing::hemisphere_point(rng);
      const auto [d1, d2] = map.cutline_distances(p);
      CHECK(close(d1, plane_distance(p, n1), 1e-10));
      CHECK(d2 >= 0.0);
      CHECK(d2 <= kPi / 2 + 1e-12);
    }
  }
}

TEST_CASE("degenerate alpha = 0: no first cutting line") {
  const PwiMap map(Protocol{0.0, 0.0});
  const Vec3 p{0.3, -0.5, std::sqrt(1 - 0.09 - 0.25)};
  const auto [d1, d2] = map.cutline_distances(p);
  CHECK(d1 == std::numeric_limits<double>::infinity());
  CHECK(close(d2, std::asin(0.5), 1e-12));
  CHECK(map.theta_domain() == kTwoPi);
  CHECK_FALSE(map.d1_exists());
  CHECK_THROWS_AS(map.param_point(kTwoPi + 1.0, 1e-6), std::domain_error);
  // identity protocol: every point is fixed
  CHECK(close(map.forward(p).final, p, 0.0));
}

TEST_CASE("param point sits on the addressed line, just inside the shell") {
  const PwiMap map(Protocol::from_degrees(60, 40));
  const double delta = 1e-9;
  for (int k = 0; k < 61; ++k) {
    const double theta = (k + 0.37) * (2.0 * kTwoPi) / 61.0;
    const Vec3 p = map.param_point(theta, delta);
    CHECK(close(norm(p), 1.0, 1e-12));
    CHECK(p.y < 0.0);
    const auto [d1, d2] = map.cutline_distances(p);
    const double d = theta < kTwoPi ? d2 : d1;
    CHECK(d <= delta * 1.01 + 1e-12);
  }
}

TEST_CASE("param point self-returns into its own bin at iterate 0") {
  const PwiMap map(Protocol::from_degrees(60, 40));
  const double eps = 1e-4;
  for (int k = 0; k < 37; ++k) {
    const double theta = (k + 0.3) * (2.0 * kTwoPi) / 37.0;
    const Vec3 p = map.param_point(theta, 1e-7);
    const CutHits hits = map.return_bins(map.forward(p), eps);
    REQUIRE(hits.count >= 1);
    double best = std::numeric_limits<double>::infinity();
    for (int h = 0; h < hits.count; ++h)
      best = std::min(best, std::fabs(hits.theta[h] - theta));
    CHECK(best <= 1e-5);
  }
}

TEST_CASE("return hits stay inside the parameter ranges") {
  const PwiMap map(Protocol::from_degrees(45, 45));
  auto rng = testing::make_rng(404);
  const double eps = 5e-2;  // wide band so hits actually occur
  int seen = 0;
  for (int i = 0; i < 3000; ++i) {
    const Vec3 p = testing::hemisphere_point(rng);
    const CutHits hits = map.return_bins(map.forward(p), eps);
    REQUIRE(hits.count <= 2);
    for (int h = 0; h < hits.count; ++h) {
      CHECK(hits.theta[h] >= 0.0);
      CHECK(hits.theta[h] < 2.0 * kTwoPi);
      ++seen;
    }
  }
  CHECK(seen > 0);
}

TEST_CASE("alpha = 0 protocols never report first-line returns") {
  const PwiMap map(Protocol::from_degrees(0, 70));
  auto rng = testing::make_rng(505);
  for (int i = 0; i < 2000; ++i) {
    const Vec3 p = testing::hemisphere_point(rng);
    const CutHits hits = map.return_bins(map.forward(p), 5e-2);
    for (int h = 0; h < hits.count; ++h) CHECK(hits.theta[h] < kTwoPi);
  }
}

TEST_CASE("a cap inside one atom keeps its area (seeded Monte Carlo)") {
  const PwiMap map(Protocol::from_degrees(45, 45));
  // pick a cap center with clearance from both cutting lines and the rim
  const DiskCoord candidates[] = {{-0.5, 0.62}, {0.55, -0.5}, {0.2, 0.9}, {-0.8, -0.35}};
  Vec3 center{};
  double rc = 0.0;
  for (const DiskCoord& c : candidates) {
    const Vec3 p = lambert_inverse(c);
    const auto [d1, d2] = map.cutline_distances(p);
    const double margin = std::min({d1, d2, std::asin(-p.y)});
    if (margin > 0.25) {
      center = p;
      rc = 0.2;
      break;
    }
  }
  REQUIRE(rc > 0.0);

  // forward image area via inverse-map membership on uniform samples
  const int n = 400000;
  auto rng = testing::make_rng(606);
  int hits = 0;
  for (int i = 0; i < n; ++i) {
    const Vec3 q = testing::hemisphere_point(rng);
    try {
      if (geodesic_distance(map.inverse(q), center) <= rc) ++hits;
    } catch (const BoundaryError&) {
    }
  }
  const double expect = 1.0 - std::cos(rc);  // cap area / hemisphere area
  const double got = double(hits) / n;
  const double sigma = std::sqrt(expect * (1.0 - expect) / n);
  CHECK(std::fabs(got - expect) <= 3.0 * sigma);
}

TEST_CASE("protocol validation") {
  CHECK_THROWS_AS(PwiMap(Protocol{-0.1, 0.5}), std::invalid_argument);
  CHECK_THROWS_AS(PwiMap(Protocol{0.5, kPi}), std::invalid_argument);
  CHECK_NOTHROW(PwiMap(Protocol::from_degrees(179.9, 0)));
}
