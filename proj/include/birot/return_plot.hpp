#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "birot/map.hpp"
#include "birot/raster.hpp"

namespace birot {

struct ReturnPlotParams {
  Protocol protocol{};
  double eps = 1e-3;
  double delta = 1e-6;
  int bins = 1000;       // T bins across theta in [0, 4*pi); must be even so
                         // no bin straddles the D2/D1 split at 2*pi
  int seeds_per_bin = 10;
  long long iterations = 20000;
  std::optional<uint64_t> jitter_seed{};  // statistical mode; lattice otherwise
};

// counts[i][j] = cutting-line returns into bin j by orbits seeded in bin i.
// Rows in the D1 range stay unseeded (all zero) when alpha == 0.
struct ReturnHistogram {
  ReturnPlotParams params;
  std::vector<uint64_t> counts;  // bins * bins, row-major by seed bin
  long long substituted_seeds = 0;
  long long truncated_orbits = 0;  // orbits cut short by an exact equator landing

  uint64_t at(int i, int j) const { return counts[size_t(i) * params.bins + j]; }
  double delta_theta() const { return 2.0 * kTwoPi / params.bins; }
};

// Parameter-to-bin index; exact multiples of delta_theta go to the lower bin.
int theta_bin(double theta, int bins);

ReturnHistogram build_return_plot(const ReturnPlotParams& params, int workers);

double empty_fraction(const ReturnHistogram& h);

// Total returns of row i over seeds_per_bin * (iterations + 1) traces.
double row_density(const ReturnHistogram& h, int i);

// Grayscale log-density image, log10(rho_ij / (eps * delta_theta) + 1),
// darker = denser, theta increasing right (seed) and up (return).
RasterImage log_render(const ReturnHistogram& h);

}  // namespace birot
