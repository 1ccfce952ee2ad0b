#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "birot/coverage.hpp"
#include "birot/density.hpp"
#include "birot/io.hpp"
#include "birot/map.hpp"
#include "birot/oracles.hpp"
#include "birot/parallel.hpp"
#include "birot/return_plot.hpp"

namespace {

using birot::Json;

struct Opts {
  double alpha = 45.0;
  double beta = 45.0;
  double eps = 1e-3;
  double delta = 1e-6;
  long long iters = 20000;
  int grid = 1024;
  int bins = 1000;
  int seeds_per_bin = 10;
  int density_seeds = 2000;
  int workers = 0;
  std::string out;
  std::string pattern = "default";
  std::string method = "both";
  std::optional<uint64_t> jitter_seed;

  // sweep grid
  int coarse = 5;
  double amin = 30.0, amax = 150.0, bmin = 30.0, bmax = 150.0;

  // oracle-check protocol
  std::optional<double> phi_rad;
  std::vector<long long> phi_rat;
};

Json base_sidecar(const std::string& command, int argc, char** argv) {
  Json j;
  j["tool"] = birot::kToolName;
  j["version"] = birot::kToolVersion;
  j["command"] = command;
  Json line = Json::array();
  for (int i = 0; i < argc; ++i) line.push_back(argv[i]);
  j["command_line"] = line;
  return j;
}

void add_protocol_flags(CLI::App* cmd, Opts& o) {
  cmd->add_option("--alpha", o.alpha, "first rotation angle, degrees")->required();
  cmd->add_option("--beta", o.beta, "second rotation angle, degrees")->required();
}

void add_jitter_flag(CLI::App* cmd, Opts& o) {
  cmd->add_option("--jitter-seed", o.jitter_seed,
                  "seed the statistical jitter mode (the only use of randomness; "
                  "deterministic lattice seeding otherwise)");
}

int cmd_render(const Opts& o, int argc, char** argv) {
  const auto prot = birot::Protocol::from_degrees(o.alpha, o.beta);
  const auto out = birot::render_exceptional_set(prot, o.eps, o.iters, o.grid, o.workers);
  birot::write_ppm(o.out + ".ppm", out.image);
  birot::write_density_grid(o.out + ".grid", out.grid);

  Json j = base_sidecar("render", argc, argv);
  j["params"] = {{"alpha_deg", o.alpha}, {"beta_deg", o.beta},   {"eps", o.eps},
                 {"iters", o.iters},     {"grid", o.grid},       {"workers", o.workers}};
  j["results"] = {{"defined_pixels", out.stats.defined_pixels},
                  {"valid_pixels", out.stats.valid_pixels},
                  {"boundary_pixels", out.stats.boundary_pixels},
                  {"hue_mean", out.stats.hue_mean},
                  {"hue_sd", out.stats.hue_sd},
                  {"lightness_mean", out.stats.lightness_mean},
                  {"lightness_cv", out.stats.lightness_cv},
                  {"lightness_scale", out.lightness_scale},
                  {"flagged_non_ergodic", out.stats.flagged_non_ergodic}};
  birot::write_json(o.out + ".json", j);

  std::printf("render: %d x %d, %zu defined pixels, hue sd %.4f, lightness cv %.4f%s\n",
              o.grid, o.grid, out.stats.defined_pixels, out.stats.hue_sd,
              out.stats.lightness_cv,
              out.stats.flagged_non_ergodic ? " (flagged non-ergodic)" : "");
  return 0;
}

int cmd_mix(const Opts& o, int argc, char** argv) {
  const auto prot = birot::Protocol::from_degrees(o.alpha, o.beta);
  const auto pattern = birot::parse_pattern(o.pattern);
  const auto out = birot::advect_pattern(prot, o.iters, pattern, o.grid, o.workers);
  birot::write_ppm(o.out + ".ppm", out.image);

  Json j = base_sidecar("mix", argc, argv);
  j["params"] = {{"alpha_deg", o.alpha}, {"beta_deg", o.beta}, {"iters", o.iters},
                 {"grid", o.grid},       {"pattern", o.pattern}, {"workers", o.workers}};
  j["results"] = {{"boundary_pixels", out.boundary_pixels}};
  birot::write_json(o.out + ".json", j);

  std::printf("mix: advected '%s' over %lld steps, %lld boundary pixels\n", o.pattern.c_str(),
              o.iters, out.boundary_pixels);
  return 0;
}

int cmd_returnplot(const Opts& o, int argc, char** argv) {
  birot::ReturnPlotParams params;
  params.protocol = birot::Protocol::from_degrees(o.alpha, o.beta);
  params.eps = o.eps;
  params.delta = o.delta;
  params.bins = o.bins;
  params.seeds_per_bin = o.seeds_per_bin;
  params.iterations = o.iters;
  params.jitter_seed = o.jitter_seed;
  const auto h = birot::build_return_plot(params, o.workers);
  birot::write_histogram_csv(o.out + ".csv", h);
  birot::write_ppm(o.out + ".ppm", birot::log_render(h));

  uint64_t total = 0;
  for (const uint64_t c : h.counts) total += c;
  const double empty = birot::empty_fraction(h);

  Json j = base_sidecar("returnplot", argc, argv);
  j["params"] = {{"alpha_deg", o.alpha},
                 {"beta_deg", o.beta},
                 {"eps", o.eps},
                 {"delta", o.delta},
                 {"bins", o.bins},
                 {"seeds_per_bin", o.seeds_per_bin},
                 {"iters", o.iters},
                 {"workers", o.workers}};
  if (o.jitter_seed) j["params"]["jitter_seed"] = *o.jitter_seed;
  j["results"] = {{"total_returns", total},
                  {"empty_fraction", empty},
                  {"substituted_seeds", h.substituted_seeds},
                  {"truncated_orbits", h.truncated_orbits}};
  birot::write_json(o.out + ".json", j);

  std::printf("returnplot: %d x %d bins, %llu returns, empty fraction %.4f\n", o.bins, o.bins,
              (unsigned long long)total, empty);
  return 0;
}

birot::CoverageParams coverage_params(const Opts& o) {
  birot::CoverageParams p;
  p.protocol = birot::Protocol::from_degrees(o.alpha, o.beta);
  p.eps = o.eps;
  p.delta = o.delta;
  p.iterations = o.iters;
  p.density_seeds = o.density_seeds;
  p.resolution = o.grid;
  p.jitter_seed = o.jitter_seed;
  return p;
}

int cmd_coverage(const Opts& o, int argc, char** argv) {
  const auto params = coverage_params(o);
  Json results;
  if (o.method == "direct" || o.method == "both") {
    const auto r = birot::phi_direct(params, o.workers);
    std::printf("phi_direct = %.4f  (%lld of %lld pixels covered, %lld boundary)\n", r.phi,
                r.covered, r.in_disk, r.boundary_pixels);
    results["phi_direct"] = {{"phi", r.phi},
                             {"covered", r.covered},
                             {"in_disk", r.in_disk},
                             {"boundary_pixels", r.boundary_pixels}};
  }
  if (o.method == "density" || o.method == "both") {
    const auto r = birot::phi_density(params, o.workers);
    std::printf("phi_density = %.4f  (%d seeds, %lld substituted, %d dropped)\n", r.phi, r.seeds,
                r.substituted_seeds, r.dropped_seeds);
    if (r.overshoot)
      std::printf("warning: phi_density exceeds 1; overlap of the fattened lines is not "
                  "negligible at these angles\n");
    results["phi_density"] = {{"phi", r.phi},
                              {"seeds", r.seeds},
                              {"substituted_seeds", r.substituted_seeds},
                              {"dropped_seeds", r.dropped_seeds},
                              {"overshoot", r.overshoot}};
  }
  results["overlap_area"] = birot::overlap_area(params.protocol, o.eps);

  if (!o.out.empty()) {
    Json j = base_sidecar("coverage", argc, argv);
    j["params"] = {{"alpha_deg", o.alpha},
                   {"beta_deg", o.beta},
                   {"eps", o.eps},
                   {"delta", o.delta},
                   {"iters", o.iters},
                   {"grid", o.grid},
                   {"density_seeds", o.density_seeds},
                   {"method", o.method},
                   {"workers", o.workers}};
    j["results"] = results;
    birot::write_json(o.out + ".json", j);
  }
  return 0;
}

int cmd_sweep(const Opts& o, int argc, char** argv) {
  if (o.coarse < 2) {
    std::fprintf(stderr, "sweep: --coarse must be at least 2\n");
    return 1;
  }
  std::vector<double> alphas, betas;
  for (int i = 0; i < o.coarse; ++i) {
    alphas.push_back(o.amin + (o.amax - o.amin) * i / (o.coarse - 1));
    betas.push_back(o.bmin + (o.bmax - o.bmin) * i / (o.coarse - 1));
  }
  const auto rows = birot::coverage_sweep(alphas, betas, coverage_params(o), o.workers);
  birot::write_sweep_csv(o.out + ".csv", rows);

  Json j = base_sidecar("sweep", argc, argv);
  j["params"] = {{"coarse", o.coarse}, {"amin", o.amin},   {"amax", o.amax},
                 {"bmin", o.bmin},     {"bmax", o.bmax},   {"eps", o.eps},
                 {"delta", o.delta},   {"iters", o.iters}, {"grid", o.grid},
                 {"density_seeds", o.density_seeds}, {"workers", o.workers}};
  size_t agree = 0;
  for (const auto& r : rows)
    if (r.abs_diff <= 0.05) ++agree;
  j["results"] = {{"rows", rows.size()}, {"cells_within_0p05", agree}};
  birot::write_json(o.out + ".json", j);

  std::printf("sweep: %zu cells, %zu with |phi_direct - phi_density| <= 0.05\n", rows.size(),
              agree);
  return 0;
}

int cmd_oracle_check(const Opts& o) {
  birot::SingleAxisProtocol axis;
  if (o.phi_rad) {
    axis = birot::SingleAxisProtocol::irrational(*o.phi_rad);
  } else if (o.phi_rat.size() == 2) {
    axis = birot::SingleAxisProtocol::rational_multiple(o.phi_rat[0], o.phi_rat[1]);
  } else {
    std::fprintf(stderr, "oracle-check: give either --phi-rad X or --phi-rat P Q\n");
    return 2;
  }
  const birot::PwiMap map(axis.protocol());
  int failures = 0;
  auto report = [&](bool ok, const char* name, const std::string& detail) {
    std::printf("[%s] %s: %s\n", ok ? "PASS" : "FAIL", name, detail.c_str());
    if (!ok) ++failures;
  };

  if (!axis.rational) {
    // orbit density against the fattened line at 100 heights
    double worst = 0.0;
    double worst_z = 0.0;
    for (int i = 0; i < 100; ++i) {
      const double z = -0.9 + 1.8 * i / 99.0;
      double theta = std::asin(z);
      if (theta < 0.0) theta += birot::kTwoPi;
      const birot::Vec3 seed = map.param_point(theta, o.delta);
      const auto counts = birot::accumulate(map, seed, o.eps, o.iters);
      const double measured = double(counts.n2) / double(o.iters + 1);
      const double expect = birot::analytic_rho(seed.z, o.eps);
      const double rel = std::fabs(measured - expect) / expect;
      if (rel > worst) {
        worst = rel;
        worst_z = z;
      }
    }
    char buf[128];
    std::snprintf(buf, sizeof buf, "worst relative error %.3f%% at z = %.3f", 100.0 * worst,
                  worst_z);
    report(worst <= 0.05, "rho against 2*eps/l(z)", buf);

    birot::CoverageParams cp;
    cp.protocol = axis.protocol();
    cp.eps = o.eps;
    cp.delta = o.delta;
    cp.iterations = o.iters;
    cp.density_seeds = o.density_seeds;
    const auto phi = birot::phi_density(cp, o.workers);
    char buf2[128];
    std::snprintf(buf2, sizeof buf2, "measured %.4f, analytic %.1f", phi.phi,
                  birot::analytic_phi(axis));
    report(std::fabs(phi.phi - 1.0) <= 0.05, "phi_density against dense-orbit coverage", buf2);
  } else {
    // periodic orbits: period q exactly, coverage collapsing toward 0
    bool periodic = true;
    for (int i = 0; i < 10 && periodic; ++i) {
      const double z = -0.85 + 1.7 * i / 9.0;
      double theta = std::asin(z);
      if (theta < 0.0) theta += birot::kTwoPi;
      birot::Vec3 p = map.param_point(theta, o.delta);
      const birot::Vec3 start = p;
      for (long long k = 0; k < axis.q; ++k) p = map.forward(p).final;
      periodic = birot::geodesic_distance(p, start) <= 1e-9;
    }
    char buf[128];
    std::snprintf(buf, sizeof buf, "10 seeds stepped %lld times", axis.q);
    report(periodic, "orbits close after q steps", buf);

    birot::CoverageParams cp;
    cp.protocol = axis.protocol();
    cp.eps = o.eps;
    cp.delta = o.delta;
    cp.iterations = o.iters;
    cp.density_seeds = o.density_seeds;
    const auto phi = birot::phi_density(cp, o.workers);
    // a periodic orbit keeps rho of order 1/q, so the estimator scales like
    // eps*q instead of reaching the analytic limit 0
    const double tol = std::max(0.05, 6.0 * o.eps * double(axis.q));
    char buf2[128];
    std::snprintf(buf2, sizeof buf2, "measured %.4f, analytic %.1f, tolerance %.3f", phi.phi,
                  birot::analytic_phi(axis), tol);
    report(phi.phi <= tol, "phi_density collapses toward 0", buf2);
  }
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bi-rotated hemispherical shell map: rendering and coverage tools"};
  app.require_subcommand(1);
  app.set_version_flag("--version", birot::kToolVersion);
  Opts o;

  CLI::App* render = app.add_subcommand("render", "density image of the fattened cutting lines");
  add_protocol_flags(render, o);
  render->add_option("--eps", o.eps, "cutting line half-width, radians");
  render->add_option("--iters", o.iters, "orbit length N");
  render->add_option("--grid", o.grid, "pixels across the projection disk");
  render->add_option("--workers", o.workers, "worker threads (0 = all cores)");
  render->add_option("--out", o.out, "output prefix (.ppm/.grid/.json)")->required();

  CLI::App* mix = app.add_subcommand("mix", "advect a reference pattern N steps");
  add_protocol_flags(mix, o);
  mix->add_option("--iters", o.iters, "advection steps N");
  mix->add_option("--grid", o.grid, "pixels across the projection disk");
  mix->add_option("--pattern", o.pattern, "default | angle | z | zbands:<count>");
  mix->add_option("--workers", o.workers, "worker threads (0 = all cores)");
  mix->add_option("--out", o.out, "output prefix (.ppm/.json)")->required();

  CLI::App* rp = app.add_subcommand("returnplot", "cutting-line return histogram");
  add_protocol_flags(rp, o);
  rp->add_option("--eps", o.eps, "return band half-width, radians");
  rp->add_option("--delta", o.delta, "seed offset from the line");
  rp->add_option("--bins", o.bins, "theta bins across [0, 4*pi); even");
  rp->add_option("--seeds-per-bin", o.seeds_per_bin, "seeds per bin");
  rp->add_option("--iters", o.iters, "orbit length N");
  rp->add_option("--workers", o.workers, "worker threads (0 = all cores)");
  add_jitter_flag(rp, o);
  rp->add_option("--out", o.out, "output prefix (.csv/.ppm/.json)")->required();

  CLI::App* cov = app.add_subcommand("coverage", "coverage of the exceptional set");
  add_protocol_flags(cov, o);
  cov->add_option("--method", o.method, "direct | density | both")
      ->check(CLI::IsMember({"direct", "density", "both"}));
  cov->add_option("--eps", o.eps, "cutting line half-width, radians");
  cov->add_option("--delta", o.delta, "seed offset from the line");
  cov->add_option("--iters", o.iters, "orbit length N");
  cov->add_option("--grid", o.grid, "pixel grid for the direct method");
  cov->add_option("--density-seeds", o.density_seeds, "seeds for the density method");
  cov->add_option("--workers", o.workers, "worker threads (0 = all cores)");
  add_jitter_flag(cov, o);
  cov->add_option("--out", o.out, "optional sidecar prefix (.json)");

  CLI::App* sweep = app.add_subcommand("sweep", "coverage comparison over a protocol grid");
  sweep->add_option("--coarse", o.coarse, "grid points per axis");
  sweep->add_option("--amin", o.amin, "alpha range start, degrees");
  sweep->add_option("--amax", o.amax, "alpha range end, degrees");
  sweep->add_option("--bmin", o.bmin, "beta range start, degrees");
  sweep->add_option("--bmax", o.bmax, "beta range end, degrees");
  sweep->add_option("--eps", o.eps, "cutting line half-width, radians");
  sweep->add_option("--delta", o.delta, "seed offset from the line");
  sweep->add_option("--iters", o.iters, "orbit length N");
  sweep->add_option("--grid", o.grid, "pixel grid for the direct method");
  sweep->add_option("--density-seeds", o.density_seeds, "seeds for the density method");
  sweep->add_option("--workers", o.workers, "worker threads (0 = all cores)");
  sweep->add_option("--out", o.out, "output prefix (.csv/.json)")->required();

  CLI::App* oracle = app.add_subcommand("oracle-check",
                                        "single-axis closed-form cross checks");
  oracle->add_option("--phi-rad", o.phi_rad, "irrational rotation angle, radians");
  oracle->add_option("--phi-rat", o.phi_rat, "rational rotation p q (phi = pi*p/q)")
      ->expected(2);
  oracle->add_option("--eps", o.eps, "cutting line half-width, radians");
  oracle->add_option("--delta", o.delta, "seed offset from the line");
  oracle->add_option("--iters", o.iters, "orbit length N");
  oracle->add_option("--density-seeds", o.density_seeds, "seeds for phi_density");
  oracle->add_option("--workers", o.workers, "worker threads (0 = all cores)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (render->parsed()) return cmd_render(o, argc, argv);
    if (mix->parsed()) return cmd_mix(o, argc, argv);
    if (rp->parsed()) return cmd_returnplot(o, argc, argv);
    if (cov->parsed()) return cmd_coverage(o, argc, argv);
    if (sweep->parsed()) return cmd_sweep(o, argc, argv);
    if (oracle->parsed()) return cmd_oracle_check(o);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
