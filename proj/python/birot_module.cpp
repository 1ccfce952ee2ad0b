#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "birot/coverage.hpp"
#include "birot/density.hpp"
#include "birot/io.hpp"
#include "birot/map.hpp"
#include "birot/oracles.hpp"
#include "birot/return_plot.hpp"

namespace py = pybind11;

namespace {

birot::Vec3 to_vec(const std::tuple<double, double, double>& t) {
  return {std::get<0>(t), std::get<1>(t), std::get<2>(t)};
}

std::tuple<double, double, double> from_vec(const birot::Vec3& v) {
  return {v.x, v.y, v.z};
}

}  // namespace

PYBIND11_MODULE(birot, m) {
  m.doc() = "bi-rotated hemispherical shell map";
  m.attr("__version__") = birot::kToolVersion;

  py::register_exception<birot::BoundaryError>(m, "BoundaryError");

  py::class_<birot::Protocol>(m, "Protocol")
      .def(py::init<double, double>(), py::arg("alpha"), py::arg("beta"))
      .def_static("from_degrees", &birot::Protocol::from_degrees, py::arg("alpha_deg"),
                  py::arg("beta_deg"))
      .def_readonly("alpha", &birot::Protocol::alpha)
      .def_readonly("beta", &birot::Protocol::beta);

  py::class_<birot::PwiMap>(m, "PwiMap")
      .def(py::init<birot::Protocol>(), py::arg("protocol"))
      .def_property_readonly("protocol", &birot::PwiMap::protocol)
      .def_property_readonly("d1_exists", &birot::PwiMap::d1_exists)
      .def_property_readonly("theta_domain", &birot::PwiMap::theta_domain)
      .def(
          "forward",
          [](const birot::PwiMap& self, const std::tuple<double, double, double>& p) {
            const auto t = self.forward(to_vec(p));
            return py::make_tuple(from_vec(t.intermediate), from_vec(t.final), int(t.atom));
          },
          py::arg("p"), "one step; returns (intermediate, final, atom)")
      .def(
          "inverse",
          [](const birot::PwiMap& self, const std::tuple<double, double, double>& p) {
            return from_vec(self.inverse(to_vec(p)));
          },
          py::arg("p"))
      .def(
          "cutline_distances",
          [](const birot::PwiMap& self, const std::tuple<double, double, double>& p) {
            const auto d = self.cutline_distances(to_vec(p));
            return py::make_tuple(d.first, d.second);
          },
          py::arg("p"))
      .def(
          "param_point",
          [](const birot::PwiMap& self, double theta, double delta) {
            return from_vec(self.param_point(theta, delta));
          },
          py::arg("theta"), py::arg("delta"));

  m.def("lambert_project", [](const std::tuple<double, double, double>& p) {
    const auto d = birot::lambert_project(to_vec(p));
    return py::make_tuple(d.u, d.v);
  });
  m.def("lambert_inverse",
        [](double u, double v) { return from_vec(birot::lambert_inverse({u, v})); });

  m.def(
      "density_stats",
      [](double alpha_deg, double beta_deg, double eps, long long iters, int resolution,
         int workers) {
        const auto grid = birot::compute_density_grid(
            birot::Protocol::from_degrees(alpha_deg, beta_deg), eps, iters, resolution, workers);
        const auto s = birot::grid_stats(grid);
        py::dict d;
        d["defined_pixels"] = s.defined_pixels;
        d["valid_pixels"] = s.valid_pixels;
        d["boundary_pixels"] = s.boundary_pixels;
        d["hue_mean"] = s.hue_mean;
        d["hue_sd"] = s.hue_sd;
        d["lightness_mean"] = s.lightness_mean;
        d["lightness_cv"] = s.lightness_cv;
        d["flagged_non_ergodic"] = s.flagged_non_ergodic;
        return d;
      },
      py::arg("alpha_deg"), py::arg("beta_deg"), py::arg("eps") = 1e-3,
      py::arg("iters") = 20000, py::arg("resolution") = 256, py::arg("workers") = 0);

  m.def(
      "phi_direct",
      [](double alpha_deg, double beta_deg, double eps, long long iters, int resolution,
         int workers) {
        birot::CoverageParams p;
        p.protocol = birot::Protocol::from_degrees(alpha_deg, beta_deg);
        p.eps = eps;
        p.iterations = iters;
        p.resolution = resolution;
        return birot::phi_direct(p, workers).phi;
      },
      py::arg("alpha_deg"), py::arg("beta_deg"), py::arg("eps") = 1e-3,
      py::arg("iters") = 20000, py::arg("resolution") = 1024, py::arg("workers") = 0);

  m.def(
      "phi_density",
      [](double alpha_deg, double beta_deg, double eps, double delta, long long iters, int seeds,
         int workers) {
        birot::CoverageParams p;
        p.protocol = birot::Protocol::from_degrees(alpha_deg, beta_deg);
        p.eps = eps;
        p.delta = delta;
        p.iterations = iters;
        p.density_seeds = seeds;
        return birot::phi_density(p, workers).phi;
      },
      py::arg("alpha_deg"), py::arg("beta_deg"), py::arg("eps") = 1e-3,
      py::arg("delta") = 1e-6, py::arg("iters") = 20000, py::arg("seeds") = 2000,
      py::arg("workers") = 0);

  m.def(
      "return_histogram",
      [](double alpha_deg, double beta_deg, double eps, double delta, int bins, int seeds_per_bin,
         long long iters, int workers) {
        birot::ReturnPlotParams p;
        p.protocol = birot::Protocol::from_degrees(alpha_deg, beta_deg);
        p.eps = eps;
        p.delta = delta;
        p.bins = bins;
        p.seeds_per_bin = seeds_per_bin;
        p.iterations = iters;
        const auto h = birot::build_return_plot(p, workers);
        py::dict d;
        d["bins"] = h.params.bins;
        d["counts"] = h.counts;
        d["empty_fraction"] = birot::empty_fraction(h);
        d["substituted_seeds"] = h.substituted_seeds;
        d["truncated_orbits"] = h.truncated_orbits;
        return d;
      },
      py::arg("alpha_deg"), py::arg("beta_deg"), py::arg("eps") = 1e-3,
      py::arg("delta") = 1e-6, py::arg("bins") = 100, py::arg("seeds_per_bin") = 2,
      py::arg("iters") = 2000, py::arg("workers") = 0);

  m.def("overlap_area",
        [](double alpha_deg, double beta_deg, double eps) {
          return birot::overlap_area(birot::Protocol::from_degrees(alpha_deg, beta_deg), eps);
        },
        py::arg("alpha_deg"), py::arg("beta_deg"), py::arg("eps") = 1e-3);

  m.def("arc_length_l", &birot::arc_length_l, py::arg("z"));
  m.def("analytic_rho", &birot::analytic_rho, py::arg("z"), py::arg("eps"));
}
