#include "birot/density.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "birot/parallel.hpp"

namespace birot {

AccumulateCounts accumulate(const PwiMap& map, Vec3 p, double eps, long long iterations) {
  const double sin_eps = std::sin(eps);
  const bool has_d1 = map.d1_exists();
  uint32_t n1 = 0, n2 = 0;
  for (long long i = 0; i <= iterations; ++i) {
    const StepTrace t = map.forward(p);
    if (has_d1 && std::fabs(t.intermediate.y) <= sin_eps) ++n1;
    if (std::fabs(t.final.y) <= sin_eps) ++n2;
    p = t.final;
  }
  return {n1, n2};
}

DensityGrid compute_density_grid(const Protocol& prot, double eps, long long iterations,
                                 int resolution, int workers) {
  if (resolution <= 0) throw std::invalid_argument("resolution must be positive");
  DensityGrid grid;
  grid.resolution = resolution;
  grid.protocol = prot;
  grid.eps = eps;
  grid.iterations = iterations;
  const size_t total = size_t(resolution) * resolution;
  grid.n1.assign(total, 0);
  grid.n2.assign(total, 0);
  grid.state.assign(total, uint8_t(PixelState::kOutside));

  parallel_for(static_cast<long long>(total), resolve_workers(workers),
               [&](long long begin, long long end) {
                 const PwiMap map(prot);
                 for (long long i = begin; i < end; ++i) {
                   const int ix = int(i % resolution);
                   const int iy = int(i / resolution);
                   const DiskCoord c = grid.pixel_center(ix, iy);
                   if (c.u * c.u + c.v * c.v >= kDiskRadius2) continue;
                   try {
                     const AccumulateCounts counts =
                         accumulate(map, lambert_inverse(c), eps, iterations);
                     grid.n1[i] = counts.n1;
                     grid.n2[i] = counts.n2;
                     grid.state[i] = uint8_t(PixelState::kValid);
                   } catch (const BoundaryError&) {
                     grid.state[i] = uint8_t(PixelState::kBoundary);
                   }
                 }
               });
  return grid;
}

HueStats grid_stats(const DensityGrid& grid) {
  HueStats s;
  double hue_sum = 0.0, hue_sq = 0.0, light_sum = 0.0, light_sq = 0.0;
  for (size_t i = 0; i < grid.state.size(); ++i) {
    if (grid.state[i] == uint8_t(PixelState::kBoundary)) {
      ++s.boundary_pixels;
      continue;
    }
    if (grid.state[i] != uint8_t(PixelState::kValid)) continue;
    ++s.valid_pixels;
    const double l = lightness(grid.n1[i], grid.n2[i], grid.iterations, grid.eps);
    light_sum += l;
    light_sq += l * l;
    if (const auto h = hue(grid.n1[i], grid.n2[i])) {
      ++s.defined_pixels;
      hue_sum += *h;
      hue_sq += *h * *h;
    }
  }
  if (s.defined_pixels > 0) {
    s.hue_mean = hue_sum / double(s.defined_pixels);
    s.hue_sd = std::sqrt(std::max(0.0, hue_sq / double(s.defined_pixels) - s.hue_mean * s.hue_mean));
  }
  if (s.valid_pixels > 0) {
    s.lightness_mean = light_sum / double(s.valid_pixels);
    const double var = std::max(0.0, light_sq / double(s.valid_pixels) -
                                         s.lightness_mean * s.lightness_mean);
    if (s.lightness_mean > 0.0) s.lightness_cv = std::sqrt(var) / s.lightness_mean;
  }
  s.flagged_non_ergodic =
      s.hue_sd > kHueSpreadThreshold || s.lightness_cv > kLightnessCvThreshold;
  return s;
}

RenderOutput render_exceptional_set(const Protocol& prot, double eps, long long iterations,
                                    int resolution, int workers) {
  RenderOutput out;
  out.grid = compute_density_grid(prot, eps, iterations, resolution, workers);
  out.stats = grid_stats(out.grid);

  // clip lightness at the 99th percentile so a few dense pixels do not wash
  // out the rest of the image
  std::vector<double> lightnesses;
  lightnesses.reserve(out.stats.defined_pixels);
  for (size_t i = 0; i < out.grid.state.size(); ++i)
    if (out.grid.state[i] == uint8_t(PixelState::kValid) && out.grid.n1[i] + out.grid.n2[i] > 0)
      lightnesses.push_back(lightness(out.grid.n1[i], out.grid.n2[i], iterations, eps));
  out.lightness_scale = 1.0;
  if (!lightnesses.empty()) {
    const size_t k = size_t(0.99 * double(lightnesses.size() - 1));
    std::nth_element(lightnesses.begin(), lightnesses.begin() + k, lightnesses.end());
    if (lightnesses[k] > 0.0) out.lightness_scale = lightnesses[k];
  }

  out.image = RasterImage(resolution, resolution);
  for (int iy = 0; iy < resolution; ++iy) {
    for (int ix = 0; ix < resolution; ++ix) {
      const size_t i = out.grid.idx(ix, iy);
      if (out.grid.state[i] != uint8_t(PixelState::kValid)) continue;  // stays white
      const auto h = hue(out.grid.n1[i], out.grid.n2[i]);
      if (!h) continue;  // never visited: white
      const double l = lightness(out.grid.n1[i], out.grid.n2[i], iterations, eps);
      const double level = std::min(l / out.lightness_scale, 1.0);
      // blue (D2 only) -> magenta -> red (D1 only); vividness tracks density
      out.image.set(ix, iy, hsl_to_rgb(240.0 + 120.0 * *h, 1.0, 1.0 - 0.5 * level));
    }
  }
  return out;
}

Pattern parse_pattern(const std::string& spec) {
  Pattern p;
  if (spec.empty() || spec == "default") {
    p.kind = Pattern::Kind::kDefault;
  } else if (spec == "angle") {
    p.kind = Pattern::Kind::kAngle;
  } else if (spec == "z") {
    p.kind = Pattern::Kind::kZLinear;
  } else if (spec.rfind("zbands:", 0) == 0) {
    p.kind = Pattern::Kind::kZBands;
    p.bands = std::stod(spec.substr(7));
    if (!(p.bands > 0.0)) throw std::invalid_argument("zbands count must be positive");
  } else {
    throw std::invalid_argument("unknown pattern: " + spec);
  }
  return p;
}

double pattern_value(const Pattern& pattern, const Vec3& p) {
  const auto angle_term = [&] {
    const double h = std::hypot(p.x, p.z);
    return h == 0.0 ? 1.0 : 0.5 * (1.0 + p.x / h);  // (1 + cos(equator angle)) / 2
  };
  const auto band_term = [&] { return 0.5 * (1.0 + std::cos(pattern.bands * kPi * p.z)); };
  switch (pattern.kind) {
    case Pattern::Kind::kAngle: return angle_term();
    case Pattern::Kind::kZBands: return band_term();
    case Pattern::Kind::kZLinear: return 0.5 * (1.0 + p.z);
    case Pattern::Kind::kDefault: break;
  }
  return angle_term() * band_term();
}

AdvectOutput advect_pattern(const Protocol& prot, long long iterations, const Pattern& pattern,
                            int resolution, int workers) {
  AdvectOutput out;
  out.image = RasterImage(resolution, resolution);
  std::vector<uint8_t> boundary(size_t(resolution) * resolution, 0);
  DensityGrid frame;  // borrowed for its pixel/disk mapping
  frame.resolution = resolution;

  parallel_for(static_cast<long long>(size_t(resolution) * resolution),
               resolve_workers(workers), [&](long long begin, long long end) {
                 const PwiMap map(prot);
                 for (long long i = begin; i < end; ++i) {
                   const int ix = int(i % resolution);
                   const int iy = int(i / resolution);
                   const DiskCoord c = frame.pixel_center(ix, iy);
                   if (c.u * c.u + c.v * c.v >= kDiskRadius2) continue;
                   try {
                     Vec3 p = lambert_inverse(c);
                     for (long long n = 0; n < iterations; ++n) p = map.inverse(p);
                     out.image.set(ix, iy, gray(pattern_value(pattern, p)));
                   } catch (const BoundaryError&) {
                     boundary[i] = 1;  // stays white, counted below
                   }
                 }
               });
  for (const uint8_t b : boundary) out.boundary_pixels += b;
  return out;
}

}  // namespace birot
