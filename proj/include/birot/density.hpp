#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "birot/map.hpp"
#include "birot/raster.hpp"

namespace birot {

enum class PixelState : uint8_t {
  kOutside = 0,   // pixel center outside the projection disk
  kValid = 1,     // orbit ran to completion
  kBoundary = 2,  // orbit hit an exact equator landing; excluded from stats
};

// Per-pixel visit counters against the eps-fattened cutting lines. n1 counts
// iterates within eps of D1 (intermediate frame), n2 within eps of D2 (final
// frame); iterate 0, the seed's own step, is included, so each counter is at
// most iterations + 1.
struct DensityGrid {
  int resolution = 0;
  Protocol protocol{};
  double eps = 0.0;
  long long iterations = 0;
  std::vector<uint32_t> n1, n2;
  std::vector<uint8_t> state;

  size_t idx(int ix, int iy) const { return size_t(iy) * resolution + ix; }

  // Pixel centers tile the square circumscribing the disk; u runs right
  // along +x, v up along +z, row 0 at the top.
  DiskCoord pixel_center(int ix, int iy) const {
    const double step = 2.0 * std::sqrt(2.0) / resolution;
    return {(ix + 0.5) * step - std::sqrt(2.0), std::sqrt(2.0) - (iy + 0.5) * step};
  }
};

struct AccumulateCounts {
  uint32_t n1 = 0;
  uint32_t n2 = 0;
};

// Counts proximity to the two cutting lines over iterates 0..iterations of
// the orbit of p. Throws BoundaryError if the orbit lands exactly on y = 0.
AccumulateCounts accumulate(const PwiMap& map, Vec3 p, double eps, long long iterations);

// Fraction of line visits owed to D1. Undefined (nullopt) when the orbit
// never came near either line.
inline std::optional<double> hue(uint32_t n1, uint32_t n2) {
  if (n1 + n2 == 0) return std::nullopt;
  return double(n1) / double(n1 + n2);
}

// Total visit density normalized by the band half-width, (n1+n2)/((N+1)*eps).
inline double lightness(uint32_t n1, uint32_t n2, long long iterations, double eps) {
  return double(n1 + n2) / (double(iterations + 1) * eps);
}

DensityGrid compute_density_grid(const Protocol& prot, double eps, long long iterations,
                                 int resolution, int workers);

struct HueStats {
  size_t defined_pixels = 0;   // valid pixels with n1 + n2 > 0
  size_t valid_pixels = 0;
  size_t boundary_pixels = 0;
  double hue_mean = 0.0;
  double hue_sd = 0.0;
  double lightness_mean = 0.0;
  double lightness_cv = 0.0;
  bool flagged_non_ergodic = false;
};

inline constexpr double kHueSpreadThreshold = 0.1;
inline constexpr double kLightnessCvThreshold = 0.5;

HueStats grid_stats(const DensityGrid& grid);

struct RenderOutput {
  DensityGrid grid;
  RasterImage image;
  double lightness_scale = 1.0;  // 99th-percentile lightness used for clipping
  HueStats stats;
};

// Density image of the fattened cutting lines: hue blends the D1 share from
// blue (all D2) through magenta to red (all D1), lightness fades vivid color
// toward white as the visit density drops; pixels never visited stay white.
RenderOutput render_exceptional_set(const Protocol& prot, double eps, long long iterations,
                                    int resolution, int workers);

struct Pattern {
  enum class Kind { kDefault, kAngle, kZBands, kZLinear };
  Kind kind = Kind::kDefault;
  double bands = 8.0;
};

// "default" (angular gradient striped in z), "angle", "z", "zbands:<count>".
Pattern parse_pattern(const std::string& spec);
double pattern_value(const Pattern& pattern, const Vec3& p);

struct AdvectOutput {
  RasterImage image;
  long long boundary_pixels = 0;
};

// Paints pattern(M^-N(pixel)): the pattern advected forward N steps, sampled
// by pulling every pixel center back through the inverse map.
AdvectOutput advect_pattern(const Protocol& prot, long long iterations, const Pattern& pattern,
                            int resolution, int workers);

}  // namespace birot
