#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "birot/map.hpp"

namespace birot {

struct CoverageParams {
  Protocol protocol{};
  double eps = 1e-3;
  double delta = 1e-6;
  long long iterations = 20000;
  int density_seeds = 2000;  // cutting-line seeds for the density estimate
  int resolution = 1024;     // pixel grid for the direct estimate
  std::optional<uint64_t> jitter_seed{};
};

struct PhiDensityResult {
  double phi = 0.0;
  int seeds = 0;              // seeds that produced an orbit
  long long substituted_seeds = 0;
  int dropped_seeds = 0;      // unseedable after bounded retries
  bool overshoot = false;     // phi came out above 1; reported verbatim
};

// Coverage from the cutting-line side: the mean of 2*eps/rho over seeds
// placed uniformly along the arc parameterization, each orbit's rho measured
// against the eps-fattened lines. Seeds self-count at iterate 0, so rho is
// never zero.
PhiDensityResult phi_density(const CoverageParams& params, int workers);

struct PhiDirectResult {
  double phi = 0.0;
  long long covered = 0;
  long long in_disk = 0;
  long long boundary_pixels = 0;  // excluded from the denominator
};

// Coverage from the area side: the fraction of equal-area pixels whose
// center orbit enters the fattened cutting lines within N iterations.
PhiDirectResult phi_direct(const CoverageParams& params, int workers);

struct SweepRow {
  double alpha_deg = 0.0;
  double beta_deg = 0.0;
  double phi_direct = 0.0;
  double phi_density = 0.0;
  double abs_diff = 0.0;
  long long substituted_seeds = 0;
  double wall_ms = 0.0;
};

std::vector<SweepRow> coverage_sweep(const std::vector<double>& alpha_deg,
                                     const std::vector<double>& beta_deg,
                                     const CoverageParams& base, int workers);

struct OrbitAreaResult {
  double area = 0.0;
  double rho = 0.0;      // (n1+n2)/(N+1) along the seed's orbit
  int visited_bins = 0;  // distinct theta bins the orbit returned into
  long long hits = 0;
};

// Area of one orbit's invariant set, estimated from the cutting-line side:
// (visited arc length) * eps / rho, the arc length resolved at bin width
// 4*pi/bins.
OrbitAreaResult orbit_area(const PwiMap& map, double theta, double eps, double delta,
                           long long iterations, int bins);

// Small-eps overlap area of the two fattened lines,
// 2*eps^2*(csc(a)sec(a) + csc(b)sec(b)); +infinity at the degenerate poles
// (either angle 0 or pi/2) where the lines osculate or coincide.
double overlap_area(const Protocol& prot, double eps);

}  // namespace birot
