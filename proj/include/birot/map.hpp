#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

#include "birot/geometry.hpp"

namespace birot {

// Rotation protocol (alpha about z, then beta about x), radians. Angles are
// restricted to [0, pi): the half-shell fold absorbs the rest of the turn.
struct Protocol {
  double alpha = 0.0;
  double beta = 0.0;

  static Protocol from_degrees(double alpha_deg, double beta_deg) {
    return {alpha_deg * kPi / 180.0, beta_deg * kPi / 180.0};
  }
};

// The four atoms of the map, keyed by which folds fire: P1 = no fold,
// P2 = fold after the z-rotation, P3 = fold after the x-rotation, P4 = both.
enum class AtomId : int { P1 = 0, P2 = 1, P3 = 2, P4 = 3 };

inline AtomId atom_from_flips(bool flip1, bool flip2) {
  return static_cast<AtomId>((flip1 ? 1 : 0) | (flip2 ? 2 : 0));
}

const char* to_string(AtomId a);

// A stage of the map landed exactly on y = 0, where the fold direction is
// ambiguous; such points have no single-valued image (a measure-zero set).
struct BoundaryError : std::runtime_error {
  BoundaryError() : std::runtime_error("orbit point landed exactly on the equator plane") {}
};

// One application of the map, keeping the frame after each stage. The
// intermediate frame is where distance to the first-stage cutting line D1 is
// read off; the final frame (also the next orbit point) serves D2.
struct StepTrace {
  Vec3 intermediate;
  Vec3 final;
  AtomId atom = AtomId::P1;
};

// Cutting-line arc parameters hit by one trace: theta in [0, 2*pi) addresses
// D2, [2*pi, 4*pi) addresses D1. At most one hit per line per step.
struct CutHits {
  int count = 0;
  double theta[2] = {0.0, 0.0};

  void add(double t) { theta[count++] = t; }
};

class PwiMap {
 public:
  explicit PwiMap(const Protocol& prot) : prot_(prot) {
    if (!(prot.alpha >= 0.0) || prot.alpha >= kPi || !(prot.beta >= 0.0) || prot.beta >= kPi)
      throw std::invalid_argument("protocol angles must lie in [0, pi)");
    cos_a_ = std::cos(prot.alpha);
    sin_a_ = std::sin(prot.alpha);
    cos_b_ = std::cos(prot.beta);
    sin_b_ = std::sin(prot.beta);
    d1_empty_ = (prot.alpha == 0.0);
  }

  // Rotate by alpha about z, folding any excursion past the equator back by
  // an extra half turn about z; then the same about x with beta. Throws
  // BoundaryError if either stage lands exactly on y = 0.
  StepTrace forward(const Vec3& p) const {
    Vec3 q = rotate_z(p, cos_a_, sin_a_);
    if (q.y == 0.0) throw BoundaryError{};
    const bool flip1 = q.y > 0.0;
    if (flip1) {
      q.x = -q.x;
      q.y = -q.y;
    }
    Vec3 r = rotate_x(q, cos_b_, sin_b_);
    if (r.y == 0.0) throw BoundaryError{};
    const bool flip2 = r.y > 0.0;
    if (flip2) {
      r.y = -r.y;
      r.z = -r.z;
    }
    return {q, r, atom_from_flips(flip1, flip2)};
  }

  // Undo the x-stage by -beta (or -beta-pi, whichever lands y <= 0), then the
  // z-stage likewise. Exact y = 0 after either undo is ambiguous and throws.
  Vec3 inverse(const Vec3& p) const {
    Vec3 q = rotate_x(p, cos_b_, -sin_b_);
    if (q.y == 0.0) throw BoundaryError{};
    if (q.y > 0.0) {
      q.y = -q.y;
      q.z = -q.z;
    }
    Vec3 r = rotate_z(q, cos_a_, -sin_a_);
    if (r.y == 0.0) throw BoundaryError{};
    if (r.y > 0.0) {
      r.x = -r.x;
      r.y = -r.y;
    }
    return r;
  }

  // (d1, d2) geodesic distances from p to the cutting lines, read off as
  // arcsin|y| in the respective frames. d1 is +infinity when alpha == 0
  // (the first stage then cuts nothing).
  std::pair<double, double> cutline_distances(const Vec3& p) const {
    const StepTrace t = forward(p);
    const double d1 = d1_empty_ ? std::numeric_limits<double>::infinity()
                                : std::asin(std::fabs(t.intermediate.y));
    const double d2 = std::asin(std::fabs(t.final.y));
    return {d1, d2};
  }

  // Point of the cutting line addressed by theta, offset a distance ~delta to
  // the inside of the shell. Built by pulling the just-inside equator point
  // (cos phi, -delta, sin phi)/|.| back through the inverse map (D2 range) or
  // through the inverse of the first stage only (D1 range). The pullback is
  // single-valued, which is what makes the parameterization sided: the two
  // halves of each 2*pi range land on the two sides of the physical line.
  Vec3 param_point(double theta, double delta) const {
    if (!(delta > 0.0)) throw std::invalid_argument("param_point: delta must be positive");
    if (!(theta >= 0.0) || theta >= 2.0 * kTwoPi)
      throw std::domain_error("param_point: theta outside [0, 4*pi)");
    const bool on_d1 = theta >= kTwoPi;
    if (on_d1 && d1_empty_)
      throw std::domain_error("param_point: D1 range addressed but alpha == 0");
    const double phi = on_d1 ? theta - kTwoPi : theta;
    const double inv_n = 1.0 / std::sqrt(1.0 + delta * delta);
    const Vec3 e{std::cos(phi) * inv_n, -delta * inv_n, std::sin(phi) * inv_n};
    if (!on_d1) return inverse(e);
    Vec3 r = rotate_z(e, cos_a_, -sin_a_);
    if (r.y == 0.0) throw BoundaryError{};
    if (r.y > 0.0) {
      r.x = -r.x;
      r.y = -r.y;
    }
    return r;
  }

  // Arc parameters of the cutting-line returns recorded by one trace:
  // within eps of D1 in the intermediate frame emits 2*pi + angle, within
  // eps of D2 in the final frame emits the angle itself. A step close to a
  // line intersection can hit both.
  CutHits return_bins(const StepTrace& t, double eps) const {
    return return_bins_presin(t, std::sin(eps));
  }

  // Same, with sin(eps) precomputed by the caller (orbit-loop variant).
  CutHits return_bins_presin(const StepTrace& t, double sin_eps) const {
    CutHits hits;
    if (std::fabs(t.final.y) <= sin_eps) hits.add(equator_angle(t.final));
    if (!d1_empty_ && std::fabs(t.intermediate.y) <= sin_eps)
      hits.add(kTwoPi + equator_angle(t.intermediate));
    return hits;
  }

  const Protocol& protocol() const { return prot_; }
  bool d1_exists() const { return !d1_empty_; }

  // Extent of the arc parameterization: [0, 4*pi) normally, [0, 2*pi) when
  // alpha == 0 and only D2 exists.
  double theta_domain() const { return d1_empty_ ? kTwoPi : 2.0 * kTwoPi; }

 private:
  Protocol prot_;
  double cos_a_ = 1.0, sin_a_ = 0.0, cos_b_ = 1.0, sin_b_ = 0.0;
  bool d1_empty_ = true;
};

// Reference implementation of one forward step along an independent code
// path: full 3x3 rotation matrices built from axis and angle, composed the
// same way (rotate about z, fold by a half turn if y ends up positive, then
// the same about x). Used to cross-check PwiMap::forward.
Vec3 stepwise_oracle_map(const Vec3& p, const Protocol& prot);

}  // namespace birot
