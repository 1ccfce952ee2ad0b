#include "birot/coverage.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <random>
#include <set>
#include <stdexcept>

#include "birot/density.hpp"
#include "birot/parallel.hpp"
#include "birot/return_plot.hpp"

namespace birot {

namespace {

// Seed theta for index k of n across the addressable range, mid-lattice so no
// seed lands exactly on a range edge.
double seed_theta(const PwiMap& map, int k, int n, double jitter01) {
  return map.theta_domain() * (double(k) + jitter01) / double(n);
}

}  // namespace

PhiDensityResult phi_density(const CoverageParams& params, int workers) {
  if (params.density_seeds <= 0) throw std::invalid_argument("density_seeds must be positive");
  const int n = params.density_seeds;

  // Per-seed integrand slots keep the final reduction in seed order, so the
  // sum does not depend on the worker count.
  std::vector<double> integrand(n, std::numeric_limits<double>::quiet_NaN());
  std::vector<uint8_t> substitutions(n, 0);
  std::vector<uint8_t> dropped(n, 0);

  parallel_for(n, resolve_workers(workers), [&](long long begin, long long end) {
    const PwiMap map(params.protocol);
    for (long long k = begin; k < end; ++k) {
      std::mt19937_64 rng(params.jitter_seed.value_or(0) + uint64_t(k) * 0x9e3779b97f4a7c15ull);
      std::uniform_real_distribution<double> unit(0.0, 1.0);
      const double base = params.jitter_seed ? unit(rng) : 0.5;
      bool done = false;
      for (int attempt = 0; attempt < 8 && !done; ++attempt) {
        const double theta = seed_theta(map, int(k), n,
                                        std::min(base + attempt * 1e-4, 0.9999));
        try {
          const Vec3 p = map.param_point(theta, params.delta);
          const AccumulateCounts counts = accumulate(map, p, params.eps, params.iterations);
          const double rho =
              double(counts.n1 + counts.n2) / double(params.iterations + 1);
          integrand[k] = 2.0 * params.eps / rho;
          done = true;
        } catch (const BoundaryError&) {
          ++substitutions[k];
        }
      }
      if (!done) dropped[k] = 1;
    }
  });

  PhiDensityResult r;
  double sum = 0.0;
  for (int k = 0; k < n; ++k) {
    r.substituted_seeds += substitutions[k];
    if (dropped[k]) {
      ++r.dropped_seeds;
      continue;
    }
    sum += integrand[k];
    ++r.seeds;
  }
  r.phi = r.seeds > 0 ? sum / double(r.seeds) : 0.0;
  r.overshoot = r.phi > 1.0;
  return r;
}

PhiDirectResult phi_direct(const CoverageParams& params, int workers) {
  const int res = params.resolution;
  if (res <= 0) throw std::invalid_argument("resolution must be positive");
  const long long total = (long long)res * res;
  const double sin_eps = std::sin(params.eps);

  std::vector<long long> covered_per(resolve_workers(workers), 0);
  std::vector<long long> in_disk_per(covered_per.size(), 0);
  std::vector<long long> boundary_per(covered_per.size(), 0);

  DensityGrid frame;
  frame.resolution = res;

  const int w = int(covered_per.size());
  parallel_for(total, w, [&](long long begin, long long end) {
    const PwiMap map(params.protocol);
    const bool has_d1 = map.d1_exists();
    // identify the chunk by its start, matching parallel_for's partition
    int chunk = 0;
    while (total * (chunk + 1) / w <= begin) ++chunk;
    long long covered = 0, in_disk = 0, boundary = 0;
    for (long long i = begin; i < end; ++i) {
      const DiskCoord c = frame.pixel_center(int(i % res), int(i / res));
      if (c.u * c.u + c.v * c.v >= kDiskRadius2) continue;
      ++in_disk;
      try {
        Vec3 p = lambert_inverse(c);
        for (long long it = 0; it <= params.iterations; ++it) {
          const StepTrace t = map.forward(p);
          if ((has_d1 && std::fabs(t.intermediate.y) <= sin_eps) ||
              std::fabs(t.final.y) <= sin_eps) {
            ++covered;
            break;
          }
          p = t.final;
        }
      } catch (const BoundaryError&) {
        ++boundary;
      }
    }
    covered_per[chunk] = covered;
    in_disk_per[chunk] = in_disk;
    boundary_per[chunk] = boundary;
  });

  PhiDirectResult r;
  for (int c = 0; c < w; ++c) {
    r.covered += covered_per[c];
    r.in_disk += in_disk_per[c];
    r.boundary_pixels += boundary_per[c];
  }
  const long long denom = r.in_disk - r.boundary_pixels;
  r.phi = denom > 0 ? double(r.covered) / double(denom) : 0.0;
  return r;
}

std::vector<SweepRow> coverage_sweep(const std::vector<double>& alpha_deg,
                                     const std::vector<double>& beta_deg,
                                     const CoverageParams& base, int workers) {
  std::vector<SweepRow> rows;
  rows.reserve(alpha_deg.size() * beta_deg.size());
  for (const double a : alpha_deg) {
    for (const double b : beta_deg) {
      const auto start = std::chrono::steady_clock::now();
      CoverageParams params = base;
      params.protocol = Protocol::from_degrees(a, b);
      const PhiDirectResult direct = phi_direct(params, workers);
      const PhiDensityResult density = phi_density(params, workers);
      const auto stop = std::chrono::steady_clock::now();
      SweepRow row;
      row.alpha_deg = a;
      row.beta_deg = b;
      row.phi_direct = direct.phi;
      row.phi_density = density.phi;
      row.abs_diff = std::fabs(direct.phi - density.phi);
      row.substituted_seeds = density.substituted_seeds;
      row.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
      rows.push_back(row);
    }
  }
  return rows;
}

OrbitAreaResult orbit_area(const PwiMap& map, double theta, double eps, double delta,
                           long long iterations, int bins) {
  const double sin_eps = std::sin(eps);
  Vec3 p = map.param_point(theta, delta);
  std::set<int> visited;
  long long hits = 0;
  for (long long i = 0; i <= iterations; ++i) {
    const StepTrace t = map.forward(p);
    const CutHits h = map.return_bins_presin(t, sin_eps);
    for (int k = 0; k < h.count; ++k) {
      visited.insert(theta_bin(h.theta[k], bins));
      ++hits;
    }
    p = t.final;
  }
  OrbitAreaResult r;
  r.hits = hits;
  r.visited_bins = int(visited.size());
  r.rho = double(hits) / double(iterations + 1);
  const double dtheta = 2.0 * kTwoPi / bins;
  r.area = r.rho > 0.0 ? double(r.visited_bins) * dtheta * eps / r.rho : 0.0;
  return r;
}

double overlap_area(const Protocol& prot, double eps) {
  const double s2a = std::sin(2.0 * prot.alpha);
  const double s2b = std::sin(2.0 * prot.beta);
  // sin(2a) only underflows approximately at a = pi/2 in floating point, so
  // treat a vanishing value as the degenerate pole it represents
  if (std::fabs(s2a) < 1e-9 || std::fabs(s2b) < 1e-9)
    return std::numeric_limits<double>::infinity();
  // 2*eps^2*(csc a sec a + csc b sec b) = 4*eps^2*(1/sin 2a + 1/sin 2b)
  return 4.0 * eps * eps * (1.0 / std::fabs(s2a) + 1.0 / std::fabs(s2b));
}

}  // namespace birot
