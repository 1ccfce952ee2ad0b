#include "birot/io.hpp"

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace birot {

namespace {

std::FILE* open_or_throw(const std::string& path, const char* mode) {
  std::FILE* f = std::fopen(path.c_str(), mode);
  if (!f) throw std::runtime_error("cannot open " + path);
  return f;
}

}  // namespace

void write_density_grid(const std::string& path, const DensityGrid& grid) {
  std::FILE* f = open_or_throw(path, "wb");
  std::fprintf(f, "birotgrid 1 %d\n", grid.resolution);
  std::fwrite(grid.state.data(), 1, grid.state.size(), f);
  std::fwrite(grid.n1.data(), sizeof(uint32_t), grid.n1.size(), f);
  std::fwrite(grid.n2.data(), sizeof(uint32_t), grid.n2.size(), f);
  std::fclose(f);
}

DensityGrid read_density_grid(const std::string& path) {
  std::FILE* f = open_or_throw(path, "rb");
  int version = 0, resolution = 0;
  if (std::fscanf(f, "birotgrid %d %d", &version, &resolution) != 2 || version != 1 ||
      resolution <= 0 || std::fgetc(f) != '\n') {
    std::fclose(f);
    throw std::runtime_error("not a birotgrid file: " + path);
  }
  DensityGrid grid;
  grid.resolution = resolution;
  const size_t total = size_t(resolution) * resolution;
  grid.state.resize(total);
  grid.n1.resize(total);
  grid.n2.resize(total);
  const bool ok = std::fread(grid.state.data(), 1, total, f) == total &&
                  std::fread(grid.n1.data(), sizeof(uint32_t), total, f) == total &&
                  std::fread(grid.n2.data(), sizeof(uint32_t), total, f) == total;
  std::fclose(f);
  if (!ok) throw std::runtime_error("truncated birotgrid file: " + path);
  return grid;
}

void write_histogram_csv(const std::string& path, const ReturnHistogram& h) {
  std::FILE* f = open_or_throw(path, "wb");
  std::fprintf(f, "i,j,count\n");
  const int T = h.params.bins;
  for (int i = 0; i < T; ++i)
    for (int j = 0; j < T; ++j)
      if (const uint64_t c = h.at(i, j))
        std::fprintf(f, "%d,%d,%" PRIu64 "\n", i, j, c);
  std::fclose(f);
}

void write_sweep_csv(const std::string& path, const std::vector<SweepRow>& rows) {
  std::FILE* f = open_or_throw(path, "wb");
  std::fprintf(f, "alpha_deg,beta_deg,phi_direct,phi_density,abs_diff,substituted_seeds,wall_ms\n");
  for (const SweepRow& r : rows)
    std::fprintf(f, "%.10g,%.10g,%.17g,%.17g,%.17g,%lld,%.3f\n", r.alpha_deg, r.beta_deg,
                 r.phi_direct, r.phi_density, r.abs_diff, r.substituted_seeds, r.wall_ms);
  std::fclose(f);
}

void write_json(const std::string& path, const Json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << j.dump(2) << "\n";
}

Json read_json(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  Json j;
  in >> j;
  return j;
}

}  // namespace birot
