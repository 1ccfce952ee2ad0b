#include "birot/raster.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace birot {

Rgb hsl_to_rgb(double hue_deg, double saturation, double lightness) {
  double h = std::fmod(hue_deg, 360.0);
  if (h < 0.0) h += 360.0;
  const double c = (1.0 - std::fabs(2.0 * lightness - 1.0)) * saturation;
  const double x = c * (1.0 - std::fabs(std::fmod(h / 60.0, 2.0) - 1.0));
  const double m = lightness - 0.5 * c;
  double r = 0, g = 0, b = 0;
  switch (static_cast<int>(h / 60.0)) {
    case 0: r = c; g = x; break;
    case 1: r = x; g = c; break;
    case 2: g = c; b = x; break;
    case 3: g = x; b = c; break;
    case 4: r = x; b = c; break;
    default: r = c; b = x; break;
  }
  auto to8 = [m](double v) { return static_cast<uint8_t>((v + m) * 255.0 + 0.5); };
  return {to8(r), to8(g), to8(b)};
}

void write_ppm(const std::string& path, const RasterImage& image) {
  std::FILE* f = std::fopen(path.c_str(), "wb");
  if (!f) throw std::runtime_error("cannot open " + path);
  std::fprintf(f, "P6\n%d %d\n255\n", image.width, image.height);
  std::fwrite(image.rgb.data(), 1, image.rgb.size(), f);
  std::fclose(f);
}

}  // namespace birot
