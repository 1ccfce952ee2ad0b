#include "birot/return_plot.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <random>
#include <stdexcept>

#include "birot/parallel.hpp"

namespace birot {

int theta_bin(double theta, int bins) {
  const double dtheta = 2.0 * kTwoPi / bins;
  int b = static_cast<int>(theta / dtheta);
  if (b >= bins) b = bins - 1;
  if (b > 0 && theta == b * dtheta) --b;  // boundary values belong to the lower bin
  return b;
}

ReturnHistogram build_return_plot(const ReturnPlotParams& params, int workers) {
  if (params.bins <= 0 || params.bins % 2 != 0)
    throw std::invalid_argument("bins must be positive and even");
  if (params.seeds_per_bin <= 0) throw std::invalid_argument("seeds_per_bin must be positive");

  ReturnHistogram h;
  h.params = params;
  const int T = params.bins;
  h.counts.assign(size_t(T) * T, 0);

  const PwiMap reference(params.protocol);
  // D1 rows exist but stay empty when there is no first cutting line
  const int seeded_rows = reference.d1_exists() ? T : T / 2;
  const double dtheta = 2.0 * kTwoPi / T;
  const double sin_eps = std::sin(params.eps);

  std::atomic<long long> substituted{0};
  std::atomic<long long> truncated{0};

  // Workers own disjoint row ranges of the shared counts array, so the
  // result is independent of the worker count.
  parallel_for(seeded_rows, resolve_workers(workers), [&](long long begin, long long end) {
    const PwiMap map(params.protocol);
    for (long long row = begin; row < end; ++row) {
      uint64_t* counts_row = h.counts.data() + size_t(row) * T;
      std::mt19937_64 rng(params.jitter_seed.value_or(0) + uint64_t(row) * 0x9e3779b97f4a7c15ull);
      std::uniform_real_distribution<double> unit(0.0, 1.0);
      for (int k = 0; k < params.seeds_per_bin; ++k) {
        const double frac = params.jitter_seed ? unit(rng)
                                               : (k + 0.5) / double(params.seeds_per_bin);
        double theta = (double(row) + frac) * dtheta;
        Vec3 p;
        bool seeded = false;
        for (int attempt = 0; attempt < 8; ++attempt) {
          try {
            p = map.param_point(theta, params.delta);
            seeded = true;
            break;
          } catch (const BoundaryError&) {
            theta = (double(row) + frac) * dtheta + dtheta * 1e-4 * (attempt + 1);
            ++substituted;
          }
        }
        if (!seeded) continue;
        try {
          for (long long i = 0; i <= params.iterations; ++i) {
            const StepTrace t = map.forward(p);
            const CutHits hits = map.return_bins_presin(t, sin_eps);
            for (int hi = 0; hi < hits.count; ++hi)
              ++counts_row[theta_bin(hits.theta[hi], T)];
            p = t.final;
          }
        } catch (const BoundaryError&) {
          ++truncated;
        }
      }
    }
  });

  h.substituted_seeds = substituted.load();
  h.truncated_orbits = truncated.load();
  return h;
}

double empty_fraction(const ReturnHistogram& h) {
  size_t empty = 0;
  for (const uint64_t c : h.counts)
    if (c == 0) ++empty;
  return double(empty) / double(h.counts.size());
}

double row_density(const ReturnHistogram& h, int i) {
  const int T = h.params.bins;
  uint64_t total = 0;
  for (int j = 0; j < T; ++j) total += h.at(i, j);
  return double(total) /
         (double(h.params.seeds_per_bin) * double(h.params.iterations + 1));
}

RasterImage log_render(const ReturnHistogram& h) {
  const int T = h.params.bins;
  const double per_trace = double(h.params.seeds_per_bin) * double(h.params.iterations + 1);
  const double scale = 1.0 / (h.params.eps * h.delta_theta());
  double max_level = 0.0;
  std::vector<double> levels(h.counts.size(), 0.0);
  for (size_t i = 0; i < h.counts.size(); ++i) {
    levels[i] = std::log10(double(h.counts[i]) / per_trace * scale + 1.0);
    max_level = std::max(max_level, levels[i]);
  }
  RasterImage img(T, T);
  if (max_level == 0.0) return img;
  for (int i = 0; i < T; ++i)
    for (int j = 0; j < T; ++j)
      img.set(i, T - 1 - j, gray(1.0 - levels[size_t(i) * T + j] / max_level));
  return img;
}

}  // namespace birot
