// Acceptance checks; one PASS/FAIL line per criterion.
// Usage: dunkl_acceptance [criterion ...]   (no arguments runs all)

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "dunkl/battery.hpp"
#include "dunkl/experiments.hpp"
#include "dunkl/funcspace.hpp"
#include "dunkl/parallel.hpp"
#include "dunkl/specfun.hpp"
#include "dunkl/summation.hpp"
#include "dunkl/transforms.hpp"
#include "oracles.hpp"

namespace fs = std::filesystem;
using namespace dunkl;
using Complex = std::complex<double>;
using specfun::Order;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

double max_over(std::size_t n, const std::function<double(std::size_t)>& err) {
  std::vector<double> e(n);
  parallel_for(n, [&](std::size_t i) { e[i] = err(i); });
  return n == 0 ? 0.0 : *std::max_element(e.begin(), e.end());
}

std::vector<double> linspace(double a, double b, std::size_t n) {
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
  out[n / 2] = (n % 2 == 1) ? 0.5 * (a + b) : out[n / 2];
  return out;
}

Outcome special_functions() {
  const std::vector<double> orders{-0.5, 0.0, 0.5, 1.0, 2.7};
  const double bessel = max_over(orders.size() * 200, [&](std::size_t k) {
    const double nu = orders[k / 200];
    const double x = 0.5 * static_cast<double>(k % 200 + 1);
    return std::abs(specfun::bessel_j(Order(nu), x) - oracle::bessel_j(nu, x));
  });
  const specfun::DunklKernel e(Order(-0.5));
  const double kernel = max_over(2001, [&](std::size_t i) {
    const double t = -50.0 + 0.05 * static_cast<double>(i);
    return std::abs(e(t) - std::exp(Complex(0.0, t)));
  });
  return {bessel < 1e-10 && kernel < 1e-10,
          "bessel max err " + sci(bessel) + ", kernel max err " + sci(kernel) + " (tol 1e-10)"};
}

// Full-line integral of f(x) E_alpha(-ixy) d mu_alpha with the adaptive oracle quadrature.
Complex direct_dunkl(Order alpha, const transforms::Signal& f, double y) {
  const specfun::DunklKernel kernel(alpha);
  const funcspace::WeightedMeasure mu(alpha);
  const auto g = [&](double x) { return f(x) * kernel(-x * y) * mu.density(x); };
  Complex total = 0.0;
  for (double a = -12.0; a < 12.0; a += 1.0) total += oracle::integrate(g, a, a + 1.0);
  return total;
}

Outcome hankel_decomposition() {
  const auto y = transforms::frequency_grid(129, 8.0);
  const quadrature::QuadratureRule rule;
  double worst = 0.0;
  for (double a : {-0.5, 0.0, 0.5, 1.3}) {
    for (const auto& tf : battery::core()) {
      const auto decomposed = transforms::dunkl_via_hankel(Order(a), tf.f, y, rule);
      const auto direct = transforms::dunkl_transform(Order(a), tf.f, y, rule);
      worst = std::max(worst, transforms::max_abs_difference(direct, decomposed));
      worst = std::max(worst, max_over(y.size(), [&](std::size_t k) {
        return std::abs(decomposed.values()[k] - direct_dunkl(Order(a), tf.f, y[k]));
      }));
    }
  }
  return {worst < 1e-7, "max residual " + sci(worst) + " (tol 1e-7)"};
}

Outcome partial_sum_decomposition() {
  const quadrature::QuadratureRule rule;
  const auto xs = linspace(-3.0, 3.0, 65);
  const summation::RadiusGrid radii = summation::RadiusGrid::merged(0.25, 8.0, 32, 32);
  double identity = 0.0;
  double violation = -1e300;
  for (double a : {0.0, 1.3}) {
    const Order alpha(a);
    for (const auto& tf : battery::core()) {
      const auto spectrum = transforms::dunkl_transform(alpha, tf.f, transforms::frequency_grid(1025, 8.0), rule);
      const auto parts = transforms::hankel_components(alpha, tf.f, transforms::positive_frequency_grid(1025, 8.0), rule);
      for (double R : {2.0, 8.0}) {
        identity = std::max(identity, max_over(xs.size(), [&](std::size_t i) {
          return std::abs(summation::dunkl_partial_sum(alpha, spectrum, R, xs[i], rule) -
                          summation::decomposed_partial_sum(alpha, parts, R, xs[i], rule));
        }));
      }
      violation = std::max(violation, max_over(xs.size(), [&](std::size_t i) {
        return summation::maximal_operator(alpha, spectrum, xs[i], radii, rule) -
               summation::decomposed_maximal_bound(alpha, parts, xs[i], radii, rule).total();
      }));
    }
  }
  return {identity < 1e-6 && violation <= 1e-9,
          "identity max err " + sci(identity) + " (tol 1e-6), max of S* - bound " + sci(violation) +
              " (slack 1e-9)"};
}

Outcome classical_reduction() {
  const quadrature::QuadratureRule rule;
  const Order alpha(-0.5);
  const auto y = transforms::frequency_grid(33, 8.0);
  const auto xs = linspace(-3.0, 3.0, 13);
  const std::vector<double> radii{2.0, 4.0, 8.0};
  double transform = 0.0;
  double sums = 0.0;
  for (const auto& tf : battery::core()) {
    const auto coarse = transforms::dunkl_transform(alpha, tf.f, y, rule);
    transform = std::max(transform, max_over(y.size(), [&](std::size_t k) {
      return std::abs(coarse.values()[k] - oracle::fourier(tf.f, y[k]));
    }));
    const auto spectrum = transforms::dunkl_transform(alpha, tf.f, transforms::frequency_grid(1025, 8.0), rule);
    sums = std::max(sums, max_over(xs.size() * radii.size(), [&](std::size_t k) {
      const double x = xs[k / radii.size()];
      const double R = radii[k % radii.size()];
      return std::abs(summation::dunkl_partial_sum(alpha, spectrum, R, x, rule) -
                      oracle::dirichlet_partial_sum(tf.f, R, x));
    }));
  }
  return {transform < 1e-6 && sums < 1e-6,
          "transform max err " + sci(transform) + ", partial sum max err " + sci(sums) + " (tol 1e-6)"};
}

Outcome gaussian_fixed_point() {
  const quadrature::QuadratureRule rule;
  const auto y = transforms::frequency_grid(161, 4.0);
  const auto& tf = battery::find("gaussian_unit");
  double worst = 0.0;
  for (double a : {-0.5, 0.0, 1.3}) {
    const auto s = transforms::dunkl_transform(Order(a), tf.f, y, rule);
    for (std::size_t k = 0; k < y.size(); ++k) {
      worst = std::max(worst, std::abs(s.values()[k] - std::exp(-y[k] * y[k] / 2.0)));
    }
  }
  return {worst < 1e-7, "max err " + sci(worst) + " (tol 1e-7)"};
}

Outcome convergence() {
  bool ok = true;
  std::string detail;
  for (double a : {0.0, 1.3}) {
    experiments::Config config;
    config.alpha = a;
    const auto result = experiments::cmd_converge(config);
    std::map<std::string, std::vector<double>> errors;
    for (const auto& row : result.report.rows) {
      errors[row["function"].get<std::string>()].push_back(row["sup_error"].get<double>());
    }
    double final_worst = 0.0;
    for (const auto& [id, e] : errors) {
      for (std::size_t i = 1; i < e.size(); ++i) ok = ok && e[i] < e[i - 1];
      ok = ok && e.back() < 1e-3;
      final_worst = std::max(final_worst, e.back());
    }
    ok = ok && errors.size() == 4;
    detail += (detail.empty() ? "" : ", ") + std::string("alpha ") + (a == 0.0 ? "0" : "1.3") +
              ": worst sup err at R=16 " + sci(final_worst);
  }
  return {ok, detail + " (monotone over R = 2,4,8,16; tol 1e-3)"};
}

Outcome lorentz_suite() {
  using namespace funcspace;
  bool ok = true;
  std::vector<std::string> notes;

  // Simple functions with repeated levels, both signs and complex values.
  const std::vector<SampledFunction> simple = {
      SampledFunction::with_cells({-3, -2, -1, 0, 1, 2, 3}, {-2.5, -1.5, -0.5, 0.5, 1.5, 2.5},
                                  {0.5, 2.0, -3.0, 1.0, Complex(0.0, 2.0), 0.5}),
      SampledFunction::sample([](double x) { return std::round(4.0 * std::exp(-x * x)) - 1.0; }, 40, 3.0),
  };
  double norm_gap = 0.0;
  bool equimeasurable = true;
  bool ordered = true;
  for (double a : {-0.5, 0.0, 1.3}) {
    const WeightedMeasure mu{Order(a)};
    for (const auto& f : simple) {
      const Rearrangement r = rearrange(mu, f);
      std::vector<double> levels = r.levels;
      levels.push_back(0.0);
      for (double s : levels) {
        // mu{f* > s} is the mass accumulated up to the last level above s.
        double mass = 0.0;
        for (std::size_t k = 0; k < r.levels.size() && r.levels[k] > s; ++k) mass = r.cumulative_mass[k];
        equimeasurable = equimeasurable && mass == measure_of_sublevel(mu, f, s);
      }
      for (double p : {1.0, 4.0 / 3.0, 2.0, 4.0}) {
        const double strong = lp_norm(mu, f, p);
        norm_gap = std::max(norm_gap, std::abs(lorentz_norm(mu, f, LorentzIndex(p, p)) - strong) / strong);
        ordered = ordered && lorentz_norm(mu, f, LorentzIndex(p, kInfiniteExponent)) <=
                                 lorentz_norm(mu, f, LorentzIndex(p, 1.0));
      }
    }
  }
  ok = equimeasurable && ordered && norm_gap < 1e-12;
  notes.push_back(std::string("equimeasurable ") + (equimeasurable ? "exact" : "NOT exact") +
                  ", weak <= L(p,1) " + (ordered ? "holds" : "FAILS") + ", |L(p,p) - Lp| rel " +
                  sci(norm_gap));

  const SampledFunction indicator = SampledFunction::with_cells({-1.0, 0.0, 1.0}, {-0.5, 0.5}, {0.0, 1.0});
  const std::pair<double, double> cases[] = {{-0.5, 0.3989422804}, {0.0, 0.25}};
  for (const auto& [a, published] : cases) {
    const WeightedMeasure mu{Order(a)};
    const double exact = a == 0.0 ? 0.25 : 1.0 / std::sqrt(2.0 * std::numbers::pi);
    const double values[] = {lp_norm(mu, indicator, 1.0), lorentz_norm(mu, indicator, LorentzIndex(1.0, 1.0)),
                             lorentz_norm(mu, indicator, LorentzIndex(1.0, kInfiniteExponent)),
                             rearrange(mu, indicator).total_mass()};
    double gap = 0.0;
    for (double v : values) gap = std::max(gap, std::abs(v - exact));
    for (double p : {2.0, 4.0}) {
      const double expected = std::pow(exact, 1.0 / p);
      gap = std::max(gap, std::abs(lorentz_norm(mu, indicator, LorentzIndex(p, kInfiniteExponent)) - expected));
      gap = std::max(gap, std::abs(lorentz_norm(mu, indicator, LorentzIndex(p, 1.0)) - expected));
    }
    ok = ok && gap < 1e-12 && std::abs(exact - published) < 1e-10;
    notes.push_back("indicator norm err " + sci(gap));
  }
  std::string detail;
  for (const auto& n : notes) detail += (detail.empty() ? "" : ", ") + n;
  return {ok, detail};
}

Outcome range_equivalence() {
  const auto s = experiments::range_equivalence_sweep(50);
  return {s.compared > 0 && s.agreed == s.compared,
          std::to_string(s.agreed) + "/" + std::to_string(s.compared) + " cells agree, " +
              std::to_string(s.skipped) + " boundary cells skipped"};
}

Outcome power_function_stability() {
  bool ok = true;
  std::string detail;
  for (double a : {0.0, 1.0}) {
    const Order alpha(a);
    const double p1 = funcspace::endpoint_exponents(alpha).p1;
    const auto small = experiments::power_norms(alpha, a + 0.5, p1, 4, 64);
    const auto large = experiments::power_norms(alpha, a + 0.5, p1, 8, 64);
    const double weak_change = std::abs(large.weak / small.weak - 1.0);
    const double strong_growth = large.strong / small.strong - 1.0;
    const double modular_growth = large.modular / small.modular - 1.0;
    ok = ok && weak_change < 0.01 && strong_growth >= 0.5;
    detail += (detail.empty() ? "" : "; ") + std::string("alpha ") + (a == 0.0 ? "0" : "1") +
              ": weak change " + sci(weak_change) + ", strong norm growth " + sci(strong_growth) +
              " (need >= 0.5), p-th power growth " + sci(modular_growth);
  }
  return {ok, detail};
}

Outcome weak_type_constants() {
  bool ok = true;
  std::string detail;
  for (double a : {0.0, 1.0}) {
    for (int endpoint : {0, 1}) {
      experiments::Config config;
      config.alpha = a;
      config.endpoint = endpoint;
      const auto result = experiments::cmd_weaktype(config);
      const auto& s = result.report.summary;
      const double hi = s["observed_constant"].get<double>();
      const double spread = s["constant_variation_factor"].get<double>();
      ok = ok && s["all_finite"].get<bool>() && std::isfinite(hi) && spread < 5.0;
      detail += (detail.empty() ? "" : "; ") + std::string("alpha ") + (a == 0.0 ? "0" : "1") +
                " p" + std::to_string(endpoint) + ": max " + sci(hi) + ", spread x" + sci(spread);
    }
  }
  return {ok, detail};
}

std::map<std::string, std::string> read_dir(const fs::path& dir) {
  std::map<std::string, std::string> out;
  for (const auto& entry : fs::directory_iterator(dir)) {
    std::ifstream in(entry.path(), std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    out[entry.path().filename().string()] = s.str();
  }
  return out;
}

Outcome determinism() {
  const fs::path root = fs::temp_directory_path() / "dunkl_acceptance_determinism";
  fs::remove_all(root);
  fs::create_directories(root);
  bool ok = true;
  std::size_t files = 0;
  for (const std::string cmd : {"transform", "converge", "weaktype", "prange"}) {
    std::map<std::string, std::string> runs[2];
    for (int rep = 0; rep < 2; ++rep) {
      const std::string out = (root / (cmd + std::to_string(rep))).string();
      const char* argv[] = {"dunkl_cli", cmd.c_str(), "--out", out.c_str()};
      std::ostringstream sink;
      ok = ok && experiments::run_cli(4, argv, sink, sink) == experiments::kExitOk;
      runs[rep] = read_dir(out);
    }
    ok = ok && !runs[0].empty() && runs[0] == runs[1];
    files += runs[0].size();
  }
  fs::remove_all(root);
  return {ok, std::to_string(files) + " output files compared byte for byte across reruns"};
}

struct Criterion {
  int id;
  const char* name;
  Outcome (*run)();
};

const Criterion kCriteria[] = {
    {1, "special functions", special_functions},
    {2, "even/odd Hankel decomposition of the transform", hankel_decomposition},
    {3, "partial-sum decomposition and maximal bound", partial_sum_decomposition},
    {4, "classical Fourier reduction", classical_reduction},
    {5, "gaussian fixed point", gaussian_fixed_point},
    {6, "partial-sum convergence", convergence},
    {7, "rearrangement and Lorentz norms", lorentz_suite},
    {8, "boundedness range equivalence", range_equivalence},
    {9, "power-function weak-norm stability", power_function_stability},
    {10, "weak-type constants", weak_type_constants},
    {11, "determinism", determinism},
};

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::stoi(argv[i]));
  int failures = 0;
  for (const Criterion& c : kCriteria) {
    if (!selected.empty() && std::find(selected.begin(), selected.end(), c.id) == selected.end()) continue;
    Outcome o{false, ""};
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.name << " | " << o.detail
              << std::endl;
    failures += o.pass ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
