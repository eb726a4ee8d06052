#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <variant>

#include "dunkl/battery.hpp"
#include "dunkl/errors.hpp"
#include "dunkl/experiments.hpp"
#include "dunkl/funcspace.hpp"
#include "dunkl/specfun.hpp"
#include "dunkl/summation.hpp"
#include "dunkl/transforms.hpp"

namespace py = pybind11;
using namespace dunkl;
using Complex = std::complex<double>;
using specfun::Order;

namespace {

using SignalArg = std::variant<std::string, py::function>;

// Battery ids resolve to the built-in functions; callables are invoked under the GIL
// because transforms evaluate them from worker threads.
transforms::Signal to_signal(const SignalArg& arg) {
  if (const auto* id = std::get_if<std::string>(&arg)) return battery::find(*id).f;
  auto fn = std::make_shared<py::function>(std::get<py::function>(arg));
  return [fn](double x) {
    py::gil_scoped_acquire gil;
    return (*fn)(x).cast<Complex>();
  };
}

quadrature::QuadratureRule make_rule(int nodes_per_panel, double max_panel_width, double truncation_radius) {
  quadrature::QuadratureRule r;
  r.nodes_per_panel = nodes_per_panel;
  r.max_panel_width = max_panel_width;
  r.truncation_radius = truncation_radius;
  return r;
}

template <class Transform>
std::vector<Complex> spectrum_values(Transform transform, double order, const SignalArg& f,
                                     const std::vector<double>& frequencies, int nodes,
                                     double width, double radius) {
  const transforms::Signal signal = to_signal(f);
  const auto rule = make_rule(nodes, width, radius);
  py::gil_scoped_release release;
  return transform(Order(order), signal, frequencies, rule).values();
}

funcspace::SampledFunction sampled(std::vector<double> grid, std::vector<Complex> values) {
  return funcspace::SampledFunction(std::move(grid), std::move(values));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Dunkl transform, partial sums and weighted norms";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<experiments::ConfigError>(m, "ConfigError", PyExc_ValueError);

  m.def("gamma", &specfun::gamma, py::arg("x"));
  m.def("bessel_j", [](double nu, double x) { return specfun::bessel_j(Order(nu), x); },
        py::arg("nu"), py::arg("x"));
  m.def("normalized_bessel", [](double nu, double x) { return specfun::normalized_bessel(Order(nu), x); },
        py::arg("nu"), py::arg("x"));
  m.def("dunkl_kernel", [](double alpha, double t) { return specfun::dunkl_kernel(Order(alpha), t); },
        py::arg("alpha"), py::arg("t"), "E_alpha(it)");

  m.def("battery_ids", [] {
    std::vector<std::string> ids;
    for (const auto& t : battery::all()) ids.push_back(t.id);
    return ids;
  });
  m.def("frequency_grid", &transforms::frequency_grid, py::arg("n"), py::arg("y_max"));

  const auto transform_doc = "Values on the given frequencies; f is a battery id or a callable.";
  m.def(
      "dunkl_transform",
      [](double alpha, const SignalArg& f, const std::vector<double>& y, int nodes, double width, double radius) {
        return spectrum_values(
            [](Order a, const transforms::Signal& s, const std::vector<double>& fr, const auto& rule) {
              return transforms::dunkl_transform(a, s, fr, rule);
            },
            alpha, f, y, nodes, width, radius);
      },
      py::arg("alpha"), py::arg("f"), py::arg("frequencies"), py::arg("nodes_per_panel") = 16,
      py::arg("max_panel_width") = 0.5, py::arg("truncation_radius") = 12.0, transform_doc);
  m.def(
      "dunkl_via_hankel",
      [](double alpha, const SignalArg& f, const std::vector<double>& y, int nodes, double width, double radius) {
        return spectrum_values(
            [](Order a, const transforms::Signal& s, const std::vector<double>& fr, const auto& rule) {
              return transforms::dunkl_via_hankel(a, s, fr, rule);
            },
            alpha, f, y, nodes, width, radius);
      },
      py::arg("alpha"), py::arg("f"), py::arg("frequencies"), py::arg("nodes_per_panel") = 16,
      py::arg("max_panel_width") = 0.5, py::arg("truncation_radius") = 12.0, transform_doc);
  m.def(
      "hankel_transform",
      [](double beta, const SignalArg& g, const std::vector<double>& y, int nodes, double width, double radius) {
        return spectrum_values(
            [](Order b, const transforms::Signal& s, const std::vector<double>& fr, const auto& rule) {
              return transforms::hankel_transform(b, s, fr, rule);
            },
            beta, g, y, nodes, width, radius);
      },
      py::arg("beta"), py::arg("g"), py::arg("frequencies"), py::arg("nodes_per_panel") = 16,
      py::arg("max_panel_width") = 0.5, py::arg("truncation_radius") = 12.0);

  m.def(
      "partial_sums",
      [](double alpha, const SignalArg& f, const std::vector<double>& radii, double x, std::size_t spectrum_n) {
        const transforms::Signal signal = to_signal(f);
        const summation::RadiusGrid grid(radii);
        const quadrature::QuadratureRule rule;
        py::gil_scoped_release release;
        const auto spectrum =
            transforms::dunkl_transform(Order(alpha), signal, transforms::frequency_grid(spectrum_n, grid.max()), rule);
        return summation::dunkl_partial_sums(Order(alpha), spectrum, grid, x, rule);
      },
      py::arg("alpha"), py::arg("f"), py::arg("radii"), py::arg("x"), py::arg("spectrum_n") = 2048,
      "S_R f(x) for each radius R (strictly increasing).");
  m.def(
      "maximal_operator",
      [](double alpha, const SignalArg& f, double x, double r_min, double r_max, std::size_t log_radii,
         std::size_t linear_radii, std::size_t spectrum_n) {
        const transforms::Signal signal = to_signal(f);
        const auto grid = summation::RadiusGrid::merged(r_min, r_max, log_radii, linear_radii);
        const quadrature::QuadratureRule rule;
        py::gil_scoped_release release;
        const auto spectrum =
            transforms::dunkl_transform(Order(alpha), signal, transforms::frequency_grid(spectrum_n, r_max), rule);
        return summation::maximal_operator(Order(alpha), spectrum, x, grid, rule);
      },
      py::arg("alpha"), py::arg("f"), py::arg("x"), py::arg("r_min") = 0.25, py::arg("r_max") = 64.0,
      py::arg("log_radii") = 64, py::arg("linear_radii") = 64, py::arg("spectrum_n") = 2048);

  m.def(
      "lp_norm",
      [](double alpha, std::vector<double> grid, std::vector<Complex> values, double p) {
        return funcspace::lp_norm(funcspace::WeightedMeasure(Order(alpha)), sampled(std::move(grid), std::move(values)), p);
      },
      py::arg("alpha"), py::arg("grid"), py::arg("values"), py::arg("p"));
  m.def(
      "lorentz_norm",
      [](double alpha, std::vector<double> grid, std::vector<Complex> values, double p, double q) {
        return funcspace::lorentz_norm(funcspace::WeightedMeasure(Order(alpha)),
                                       sampled(std::move(grid), std::move(values)), funcspace::LorentzIndex(p, q));
      },
      py::arg("alpha"), py::arg("grid"), py::arg("values"), py::arg("p"), py::arg("q"),
      "q = float('inf') gives the weak norm.");
  m.def(
      "endpoint_exponents",
      [](double alpha) {
        const auto e = funcspace::endpoint_exponents(Order(alpha));
        return std::make_pair(e.p0, e.p1);
      },
      py::arg("alpha"));
  m.def("ap_power_weight_check",
        [](double alpha, double p) { return funcspace::ap_power_weight_check(Order(alpha), p); },
        py::arg("alpha"), py::arg("p"));

  m.def(
      "_run_experiment_json",
      [](const std::string& command, const std::string& config_json) {
        const experiments::Config config = experiments::Config::from_json(experiments::json::parse(config_json));
        py::gil_scoped_release release;
        experiments::RunResult r;
        if (command == "transform") r = experiments::cmd_transform(config);
        else if (command == "converge") r = experiments::cmd_converge(config);
        else if (command == "weaktype") r = experiments::cmd_weaktype(config);
        else if (command == "prange") r = experiments::cmd_prange(config);
        else throw experiments::ConfigError("unknown command '" + command + "'");
        return std::make_pair(r.exit_code, r.files);
      },
      py::arg("command"), py::arg("config_json"));
}
