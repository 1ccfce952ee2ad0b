#pragma once

#include <cmath>
#include <numbers>

namespace birot {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Plain 3-vector. Domain points of the shell map are unit vectors with
// y <= 0 (the lower hemisphere, the shell seen from the -y side); the same
// type carries plane normals and generic directions.
struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

inline double dot(const Vec3& a, const Vec3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

Vec3 normalized(const Vec3& a);

// Planar point in the equal-area disk of radius sqrt(2).
struct DiskCoord {
  double u = 0.0;
  double v = 0.0;
};

inline constexpr double kDiskRadius2 = 2.0;  // squared radius of the disk

// Right-handed rotations about the +z / +x axes. The (c, s) overloads take
// precomputed cos/sin so orbit loops do not pay for trig every step.
inline Vec3 rotate_z(const Vec3& p, double c, double s) {
  return {p.x * c - p.y * s, p.x * s + p.y * c, p.z};
}

inline Vec3 rotate_x(const Vec3& p, double c, double s) {
  return {p.x, p.y * c - p.z * s, p.y * s + p.z * c};
}

inline Vec3 rotate_z(const Vec3& p, double theta) {
  return rotate_z(p, std::cos(theta), std::sin(theta));
}

inline Vec3 rotate_x(const Vec3& p, double theta) {
  return rotate_x(p, std::cos(theta), std::sin(theta));
}

// Great-circle distance between unit vectors; the dot product is clamped so
// rounding just past +-1 cannot produce NaN.
double geodesic_distance(const Vec3& a, const Vec3& b);

// Geodesic distance from unit vector p to the great circle cut out by the
// plane through the origin with unit normal n.
double plane_distance(const Vec3& p, const Vec3& unit_normal);

// Lambert azimuthal equal-area projection centered on the bottom pole
// (0,-1,0): u runs along +x, v along +z, and the shell boundary (y = 0)
// lands on the rim of the radius-sqrt(2) disk. lambert_inverse rejects
// points outside the disk (std::domain_error).
DiskCoord lambert_project(const Vec3& p);
Vec3 lambert_inverse(const DiskCoord& c);

// Angle of p around the y-axis: atan2(z, x) wrapped to [0, 2*pi). Used to
// address positions along the shell boundary and (through isometric frames)
// along the cutting lines. The poles x = z = 0 have no angle
// (std::domain_error).
double equator_angle(const Vec3& p);

}  // namespace birot
