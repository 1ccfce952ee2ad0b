#include "birot/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace birot {

Vec3 normalized(const Vec3& a) {
  const double n = norm(a);
  if (n == 0.0) throw std::domain_error("normalized: zero vector");
  return {a.x / n, a.y / n, a.z / n};
}

double geodesic_distance(const Vec3& a, const Vec3& b) {
  return std::acos(std::clamp(dot(a, b), -1.0, 1.0));
}

double plane_distance(const Vec3& p, const Vec3& unit_normal) {
  return std::asin(std::clamp(std::fabs(dot(p, unit_normal)), 0.0, 1.0));
}

DiskCoord lambert_project(const Vec3& p) {
  if (p.y >= 1.0) throw std::domain_error("lambert_project: antipode of the projection center");
  const double s = std::sqrt(2.0 / (1.0 - p.y));
  return {s * p.x, s * p.z};
}

Vec3 lambert_inverse(const DiskCoord& c) {
  const double q = c.u * c.u + c.v * c.v;
  if (q > kDiskRadius2) throw std::domain_error("lambert_inverse: outside the disk");
  const double f = std::sqrt(1.0 - 0.25 * q);
  return {c.u * f, 0.5 * q - 1.0, c.v * f};
}

double equator_angle(const Vec3& p) {
  if (p.x == 0.0 && p.z == 0.0) throw std::domain_error("equator_angle: pole");
  double a = std::atan2(p.z, p.x);
  if (a < 0.0) a += kTwoPi;
  if (a >= kTwoPi) a = 0.0;  // rounding of tiny negative angles
  return a;
}

}  // namespace birot
