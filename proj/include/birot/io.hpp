#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "birot/coverage.hpp"
#include "birot/density.hpp"
#include "birot/return_plot.hpp"

namespace birot {

using Json = nlohmann::json;

inline constexpr const char* kToolName = "birot";
inline constexpr const char* kToolVersion = "0.1.0";

// Flat little-endian dump: one header line "birotgrid 1 <resolution>", then
// the state bytes, then n1 and n2 as uint32 arrays. Run parameters live in
// the JSON sidecar written next to the grid.
void write_density_grid(const std::string& path, const DensityGrid& grid);
DensityGrid read_density_grid(const std::string& path);

// Sparse nonzero cells, "i,j,count" rows in row-major order.
void write_histogram_csv(const std::string& path, const ReturnHistogram& h);

void write_sweep_csv(const std::string& path, const std::vector<SweepRow>& rows);

void write_json(const std::string& path, const Json& j);
Json read_json(const std::string& path);

}  // namespace birot
