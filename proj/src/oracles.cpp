#include "birot/oracles.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace birot {

SingleAxisProtocol SingleAxisProtocol::irrational(double phi_rad) {
  if (!(phi_rad > 0.0) || phi_rad >= kPi)
    throw std::invalid_argument("phi must lie in (0, pi)");
  SingleAxisProtocol s;
  s.phi = phi_rad;
  s.rational = false;
  return s;
}

SingleAxisProtocol SingleAxisProtocol::rational_multiple(long long p, long long q) {
  if (p <= 0 || q <= 0 || p >= q)
    throw std::invalid_argument("need 0 < p < q for phi = pi*p/q in (0, pi)");
  const long long g = std::gcd(p, q);
  SingleAxisProtocol s;
  s.p = p / g;
  s.q = q / g;
  s.phi = kPi * double(s.p) / double(s.q);
  s.rational = true;
  return s;
}

double arc_length_l(double z) {
  if (!(std::fabs(z) < 1.0)) throw std::domain_error("height must satisfy |z| < 1");
  return kPi * std::sqrt(1.0 - z * z);
}

double analytic_rho(double z, double eps) {
  const double l = arc_length_l(z);
  return 2.0 * eps < l ? 2.0 * eps / l : 1.0;
}

double analytic_phi(const SingleAxisProtocol& prot) {
  return prot.rational ? 0.0 : 1.0;
}

}  // namespace birot
