#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace birot {

struct Rgb {
  uint8_t r = 255, g = 255, b = 255;
};

struct RasterImage {
  int width = 0;
  int height = 0;
  std::vector<uint8_t> rgb;  // 3 bytes per pixel, row-major, row 0 on top

  RasterImage() = default;
  RasterImage(int w, int h) : width(w), height(h), rgb(size_t(w) * h * 3, 255) {}

  void set(int x, int y, Rgb c) {
    const size_t i = (size_t(y) * width + x) * 3;
    rgb[i] = c.r;
    rgb[i + 1] = c.g;
    rgb[i + 2] = c.b;
  }
};

// hue in degrees [0, 360), saturation and lightness in [0, 1].
Rgb hsl_to_rgb(double hue_deg, double saturation, double lightness);

inline Rgb gray(double v) {
  const double c = v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v);
  const auto b = static_cast<uint8_t>(c * 255.0 + 0.5);
  return {b, b, b};
}

// Binary P6, 8 bits per channel.
void write_ppm(const std::string& path, const RasterImage& image);

}  // namespace birot
