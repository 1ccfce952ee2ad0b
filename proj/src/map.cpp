#include "birot/map.hpp"

#include <array>

namespace birot {

const char* to_string(AtomId a) {
  switch (a) {
    case AtomId::P1: return "P1";
    case AtomId::P2: return "P2";
    case AtomId::P3: return "P3";
    case AtomId::P4: return "P4";
  }
  return "?";
}

namespace {

using Mat3 = std::array<std::array<double, 3>, 3>;

// Rodrigues rotation matrix for a unit axis and angle.
Mat3 axis_angle(const Vec3& u, double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const double t = 1.0 - c;
  return {{{c + u.x * u.x * t, u.x * u.y * t - u.z * s, u.x * u.z * t + u.y * s},
           {u.y * u.x * t + u.z * s, c + u.y * u.y * t, u.y * u.z * t - u.x * s},
           {u.z * u.x * t - u.y * s, u.z * u.y * t + u.x * s, c + u.z * u.z * t}}};
}

Vec3 apply(const Mat3& m, const Vec3& p) {
  return {m[0][0] * p.x + m[0][1] * p.y + m[0][2] * p.z,
          m[1][0] * p.x + m[1][1] * p.y + m[1][2] * p.z,
          m[2][0] * p.x + m[2][1] * p.y + m[2][2] * p.z};
}

}  // namespace

Vec3 stepwise_oracle_map(const Vec3& p, const Protocol& prot) {
  const Vec3 zhat{0.0, 0.0, 1.0};
  const Vec3 xhat{1.0, 0.0, 0.0};
  const Mat3 rz = axis_angle(zhat, prot.alpha);
  const Mat3 rz_fold = axis_angle(zhat, kPi);
  const Mat3 rx = axis_angle(xhat, prot.beta);
  const Mat3 rx_fold = axis_angle(xhat, kPi);

  Vec3 q = apply(rz, p);
  if (q.y == 0.0) throw BoundaryError{};
  if (q.y > 0.0) q = apply(rz_fold, q);
  Vec3 r = apply(rx, q);
  if (r.y == 0.0) throw BoundaryError{};
  if (r.y > 0.0) r = apply(rx_fold, r);
  return r;
}

}  // namespace birot
