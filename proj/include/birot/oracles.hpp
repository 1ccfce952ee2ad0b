#pragma once

#include <cstdint>

#include "birot/map.hpp"

namespace birot {

// Single-axis protocol (alpha = phi, beta = 0): orbits stay on their height
// circle, where coverage has closed forms. Whether phi is a rational
// multiple of pi is declared by the caller, never detected from the double.
struct SingleAxisProtocol {
  double phi = 0.0;
  bool rational = false;
  long long p = 0;
  long long q = 1;

  static SingleAxisProtocol irrational(double phi_rad);
  static SingleAxisProtocol rational_multiple(long long p, long long q);  // phi = pi*p/q

  Protocol protocol() const { return {phi, 0.0}; }
};

// Arc length of the half circle at height z inside the shell, pi*sqrt(1-z^2).
double arc_length_l(double z);

// Orbit density against one eps-fattened line for a dense single-axis orbit
// at height z: 2*eps/l(z), saturating at 1 when the band swallows the arc.
double analytic_rho(double z, double eps);

// Limiting coverage: 1 for irrational phi/pi (orbits dense on their circle),
// 0 for rational (periodic orbits cover a measure-zero set).
double analytic_phi(const SingleAxisProtocol& prot);

}  // namespace birot
