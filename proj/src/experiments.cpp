#include "dunkl/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "dunkl/battery.hpp"
#include "dunkl/csv.hpp"
#include "dunkl/errors.hpp"
#include "dunkl/parallel.hpp"

namespace dunkl::experiments {

namespace {

using Complex = std::complex<double>;
using funcspace::LorentzIndex;
using funcspace::SampledFunction;
using funcspace::WeightedMeasure;
using specfun::Order;
using transforms::Spectrum;
using transforms::TailDiagnostics;

constexpr double kSweepAlphaMin = -0.49;
constexpr double kSweepAlphaMax = 3.0;
constexpr double kSweepPMax = 8.0;
constexpr double kBoundaryGap = 1e-12;

std::string fmt(double v) { return csv::format_double(v); }

json exponent_json(double p) {
  if (std::isinf(p)) return "inf";
  return p;
}

json tail_json(const std::string& label, const TailDiagnostics& t) {
  return {{"source", label},
          {"max_tail_estimate", t.max_tail_estimate},
          {"relative_to_peak", exponent_json(t.relative_to_peak)},
          {"warning", t.warning}};
}

template <class T>
void require(bool ok, const T& message) {
  if (!ok) throw ConfigError(message);
}

void require_grid_count(std::size_t n, const char* name) {
  require(n >= 2 && n % 2 == 0 && n <= (1u << 16),
          std::string(name) + " must be an even count in [2, 65536]");
}

void require_positive(double v, const char* name) {
  require(v > 0.0 && std::isfinite(v), std::string(name) + " must be positive and finite");
}

// Shared bookkeeping for tail diagnostics and the exit-code policy.
class TailLedger {
 public:
  explicit TailLedger(double hard_cap) : hard_cap_(hard_cap) {}

  void add(const std::string& label, const TailDiagnostics& t) {
    entries_.push_back(tail_json(label, t));
    warnings_ = warnings_ || t.warning;
    exceeded_ = exceeded_ || t.relative_to_peak > hard_cap_;
  }

  void finish(RunResult& result) const {
    result.report.tail_diagnostics = entries_;
    result.report.summary["tail_warning"] = warnings_;
    result.report.summary["tail_hard_cap_exceeded"] = exceeded_;
    if (exceeded_) result.exit_code = kExitNumerical;
  }

 private:
  double hard_cap_;
  json entries_ = json::array();
  bool warnings_ = false;
  bool exceeded_ = false;
};

RunResult start(const std::string& name, const Config& config) {
  config.validate();
  RunResult r;
  r.report.experiment_name = name;
  r.report.parameters = config.to_json();
  return r;
}

void seal(RunResult& r) { r.files["report.json"] = r.report.to_json().dump(2) + "\n"; }

std::string table_text(const csv::Table& t) {
  std::ostringstream out;
  t.write(out);
  return out.str();
}

Spectrum dunkl_spectrum(const Config& config, const transforms::Signal& f, double coverage) {
  const std::vector<double> freqs = transforms::frequency_grid(config.spectrum_n, coverage);
  return transforms::dunkl_transform(Order(config.alpha), f, freqs, config.rule());
}

double max_value(const std::vector<double>& xs) {
  return xs.empty() ? 0.0 : *std::max_element(xs.begin(), xs.end());
}

}  // namespace

// ---------------------------------------------------------------- Config

void Config::validate() const {
  try {
    (void)Order(alpha);
    rule().validate();
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
  require_grid_count(grid_n, "grid_n");
  require_grid_count(norm_grid_n, "norm_grid_n");
  require(spectrum_n >= 16 && spectrum_n <= (1u << 16), "spectrum_n must lie in [16, 65536]");
  require(freq_n >= 2 && freq_n <= (1u << 16), "freq_n must lie in [2, 65536]");
  require_positive(x_max, "x_max");
  require_positive(radius, "radius");
  require_positive(rmax, "rmax");
  require_positive(r_min, "r_min");
  require(r_min < rmax, "r_min must be below rmax");
  require(log_radii >= 2 && linear_radii >= 2, "log_radii and linear_radii must be >= 2");
  require_positive(freq_max, "freq_max");
  require_positive(norm_x_max, "norm_x_max");
  require(!r_schedule.empty(), "r_schedule must not be empty");
  for (std::size_t i = 0; i < r_schedule.size(); ++i) {
    require_positive(r_schedule[i], "r_schedule entries");
    require(i == 0 || r_schedule[i] > r_schedule[i - 1], "r_schedule must be strictly increasing");
  }
  require(lp_exponent >= 1.0 && std::isfinite(lp_exponent), "lp_exponent must be >= 1");
  require(endpoint == 0 || endpoint == 1, "endpoint must be 0 or 1");
  for (double p : p_values) require(p > 1.0 && std::isfinite(p), "p_values must be > 1");
  require(!power_windows.empty(), "power_windows must not be empty");
  for (std::size_t i = 0; i < power_windows.size(); ++i) {
    require(power_windows[i] >= 1 && power_windows[i] <= 60, "power_windows must lie in [1, 60]");
    require(i == 0 || power_windows[i] > power_windows[i - 1],
            "power_windows must be strictly increasing");
  }
  require(cells_per_octave >= 1 && cells_per_octave <= 4096,
          "cells_per_octave must lie in [1, 4096]");
  require(sweep_n >= 2 && sweep_n <= 2000, "sweep_n must lie in [2, 2000]");
  require_positive(tail_hard_cap, "tail_hard_cap");
  try {
    (void)battery::find(function);
    for (const std::string& id : battery_ids()) (void)battery::find(id);
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
}

json Config::to_json() const {
  return {{"alpha", alpha},
          {"function", function},
          {"functions", battery_ids()},
          {"grid_n", grid_n},
          {"x_max", x_max},
          {"radius", radius},
          {"rmax", rmax},
          {"r_min", r_min},
          {"log_radii", log_radii},
          {"linear_radii", linear_radii},
          {"freq_n", freq_n},
          {"freq_max", freq_max},
          {"spectrum_n", spectrum_n},
          {"nodes_per_panel", nodes_per_panel},
          {"max_panel_width", max_panel_width},
          {"r_schedule", r_schedule},
          {"lp_exponent", lp_exponent},
          {"endpoint", endpoint},
          {"norm_grid_n", norm_grid_n},
          {"norm_x_max", norm_x_max},
          {"p_values", p_values},
          {"power_windows", power_windows},
          {"cells_per_octave", cells_per_octave},
          {"sweep_n", sweep_n},
          {"tail_hard_cap", tail_hard_cap}};
}

Config Config::from_json(const json& j, Config base) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  using Setter = std::function<void(Config&, const json&)>;
  static const std::map<std::string, Setter> setters = {
      {"alpha", [](Config& c, const json& v) { v.get_to(c.alpha); }},
      {"function", [](Config& c, const json& v) { v.get_to(c.function); }},
      {"functions", [](Config& c, const json& v) { v.get_to(c.functions); }},
      {"grid_n", [](Config& c, const json& v) { v.get_to(c.grid_n); }},
      {"x_max", [](Config& c, const json& v) { v.get_to(c.x_max); }},
      {"radius", [](Config& c, const json& v) { v.get_to(c.radius); }},
      {"rmax", [](Config& c, const json& v) { v.get_to(c.rmax); }},
      {"r_min", [](Config& c, const json& v) { v.get_to(c.r_min); }},
      {"log_radii", [](Config& c, const json& v) { v.get_to(c.log_radii); }},
      {"linear_radii", [](Config& c, const json& v) { v.get_to(c.linear_radii); }},
      {"freq_n", [](Config& c, const json& v) { v.get_to(c.freq_n); }},
      {"freq_max", [](Config& c, const json& v) { v.get_to(c.freq_max); }},
      {"spectrum_n", [](Config& c, const json& v) { v.get_to(c.spectrum_n); }},
      {"nodes_per_panel", [](Config& c, const json& v) { v.get_to(c.nodes_per_panel); }},
      {"max_panel_width", [](Config& c, const json& v) { v.get_to(c.max_panel_width); }},
      {"r_schedule", [](Config& c, const json& v) { v.get_to(c.r_schedule); }},
      {"lp_exponent", [](Config& c, const json& v) { v.get_to(c.lp_exponent); }},
      {"endpoint", [](Config& c, const json& v) { v.get_to(c.endpoint); }},
      {"norm_grid_n", [](Config& c, const json& v) { v.get_to(c.norm_grid_n); }},
      {"norm_x_max", [](Config& c, const json& v) { v.get_to(c.norm_x_max); }},
      {"p_values", [](Config& c, const json& v) { v.get_to(c.p_values); }},
      {"power_windows", [](Config& c, const json& v) { v.get_to(c.power_windows); }},
      {"cells_per_octave", [](Config& c, const json& v) { v.get_to(c.cells_per_octave); }},
      {"sweep_n", [](Config& c, const json& v) { v.get_to(c.sweep_n); }},
      {"tail_hard_cap", [](Config& c, const json& v) { v.get_to(c.tail_hard_cap); }},
  };
  for (const auto& [key, value] : j.items()) {
    const auto it = setters.find(key);
    if (it == setters.end()) throw ConfigError("unknown config key '" + key + "'");
    try {
      it->second(base, value);
    } catch (const json::exception& e) {
      throw ConfigError("config key '" + key + "': " + e.what());
    }
  }
  return base;
}

Config Config::from_json(const json& j) { return from_json(j, Config{}); }

std::vector<std::string> Config::battery_ids() const {
  if (!functions.empty()) return functions;
  std::vector<std::string> ids;
  for (const auto& t : battery::core()) ids.push_back(t.id);
  return ids;
}

quadrature::QuadratureRule Config::rule() const {
  quadrature::QuadratureRule r;
  r.nodes_per_panel = nodes_per_panel;
  r.max_panel_width = max_panel_width;
  r.truncation_radius = radius;
  return r;
}

summation::RadiusGrid Config::radius_grid() const {
  return summation::RadiusGrid::merged(r_min, rmax, log_radii, linear_radii);
}

json ExperimentReport::to_json() const {
  return {{"experiment", experiment_name},
          {"parameters", parameters},
          {"rows", rows},
          {"summary", summary},
          {"tail_diagnostics", tail_diagnostics}};
}

// ---------------------------------------------------------------- helpers

SampledFunction truncated_power(double exponent, int k, std::size_t cells_per_octave) {
  if (k < 1) throw DomainError("truncation window exponent k must be >= 1");
  if (cells_per_octave < 1) throw DomainError("cells_per_octave must be >= 1");
  const double inner = std::exp2(-k);
  const std::size_t cells = 2 * static_cast<std::size_t>(k) * cells_per_octave;
  // Positive half: [0, inner] carries zero, then geometric cells up to 2^k.
  std::vector<double> edges{0.0, inner};
  std::vector<double> nodes{0.5 * inner};
  std::vector<Complex> values{0.0};
  for (std::size_t j = 1; j <= cells; ++j) {
    const double e = inner * std::exp2(static_cast<double>(j) / cells_per_octave);
    const double mid = std::sqrt(edges.back() * e);
    edges.push_back(j == cells ? std::exp2(k) : e);
    nodes.push_back(mid);
    values.emplace_back(std::pow(mid, -exponent));
  }
  std::vector<double> all_edges;
  std::vector<double> all_nodes;
  std::vector<Complex> all_values;
  for (std::size_t j = edges.size(); j-- > 1;) all_edges.push_back(-edges[j]);
  all_edges.insert(all_edges.end(), edges.begin(), edges.end());
  for (std::size_t j = nodes.size(); j-- > 0;) {
    all_nodes.push_back(-nodes[j]);
    all_values.push_back(values[j]);
  }
  all_nodes.insert(all_nodes.end(), nodes.begin(), nodes.end());
  all_values.insert(all_values.end(), values.begin(), values.end());
  return SampledFunction::with_cells(std::move(all_edges), std::move(all_nodes),
                                     std::move(all_values));
}

PowerNorms power_norms(Order alpha, double exponent, double p, int k,
                       std::size_t cells_per_octave) {
  const WeightedMeasure mu(alpha);
  const SampledFunction f = truncated_power(exponent, k, cells_per_octave);
  const double strong = funcspace::lp_norm(mu, f, p);
  return {funcspace::lorentz_norm(mu, f, LorentzIndex(p, funcspace::kInfiniteExponent)), strong,
          std::pow(strong, p)};
}

MaximalSamples maximal_function_samples(const Config& config, const transforms::Signal& f) {
  const Order alpha(config.alpha);
  const Spectrum spectrum = dunkl_spectrum(config, f, config.rmax);
  const summation::RadiusGrid radii = config.radius_grid();
  const quadrature::QuadratureRule rule = config.rule();
  std::vector<double> grid = SampledFunction::offset_grid(config.norm_grid_n, config.norm_x_max);
  std::vector<Complex> values(grid.size());
  parallel_for(grid.size(), [&](std::size_t i) {
    values[i] = summation::maximal_operator(alpha, spectrum, grid[i], radii, rule);
  });
  return {SampledFunction(std::move(grid), std::move(values)), spectrum.tail()};
}

SweepResult range_equivalence_sweep(std::size_t n) {
  SweepResult s;
  for (std::size_t i = 0; i < n; ++i) {
    const double a = kSweepAlphaMin + (kSweepAlphaMax - kSweepAlphaMin) * static_cast<double>(i) /
                                          static_cast<double>(n - 1);
    const Order alpha(a);
    const auto [p0, p1] = funcspace::endpoint_exponents(alpha);
    for (std::size_t j = 0; j < n; ++j) {
      const double p = 1.0 + (kSweepPMax - 1.0) * static_cast<double>(j + 1) / static_cast<double>(n);
      if (std::abs(p - p0) < kBoundaryGap || std::abs(p - p1) < kBoundaryGap) {
        ++s.skipped;
        continue;
      }
      ++s.compared;
      if (funcspace::ap_power_weight_check(alpha, p) == (p0 < p && p < p1)) ++s.agreed;
    }
  }
  return s;
}

// ---------------------------------------------------------------- commands

RunResult cmd_transform(const Config& config) {
  RunResult result = start("transform", config);
  const Order alpha(config.alpha);
  const auto& tf = battery::find(config.function);
  const quadrature::QuadratureRule rule = config.rule();
  const std::vector<double> freqs = transforms::frequency_grid(config.freq_n, config.freq_max);

  const Spectrum direct = transforms::dunkl_transform(alpha, tf.f, freqs, rule);
  const Spectrum decomposed = transforms::dunkl_via_hankel(alpha, tf.f, freqs, rule);

  double residual = 0.0;
  for (std::size_t k = 0; k < freqs.size(); ++k) {
    const double r = std::abs(direct.values()[k] - decomposed.values()[k]);
    residual = std::max(residual, r);
    result.report.rows.push_back({{"y", freqs[k]},
                                  {"re", direct.values()[k].real()},
                                  {"im", direct.values()[k].imag()},
                                  {"decomposition_residual", r}});
  }
  result.report.summary["decomposition_residual_sup"] = residual;
  result.report.summary["max_error"] = residual;

  TailLedger tails(config.tail_hard_cap);
  tails.add("dunkl_transform", direct.tail());
  tails.add("dunkl_via_hankel", decomposed.tail());
  tails.finish(result);

  std::ostringstream spectrum_csv;
  csv::write_spectrum(spectrum_csv, direct);
  result.files["spectrum.csv"] = spectrum_csv.str();
  std::ostringstream decomposed_csv;
  csv::write_spectrum(decomposed_csv, decomposed);
  result.files["spectrum_decomposed.csv"] = decomposed_csv.str();
  seal(result);
  return result;
}

RunResult cmd_converge(const Config& config) {
  RunResult result = start("converge", config);
  const Order alpha(config.alpha);
  const WeightedMeasure mu(alpha);
  const quadrature::QuadratureRule rule = config.rule();
  const summation::RadiusGrid schedule(config.r_schedule);
  const std::vector<double> grid = SampledFunction::offset_grid(config.grid_n, config.x_max);
  TailLedger tails(config.tail_hard_cap);
  csv::Table table({"function", "R", "sup_error", "lp_error"});
  json per_function = json::object();
  double worst_final = 0.0;
  bool all_monotone = true;

  for (const std::string& id : config.battery_ids()) {
    const auto& tf = battery::find(id);
    const Spectrum spectrum = dunkl_spectrum(config, tf.f, schedule.max());
    tails.add(id, spectrum.tail());

    // errors[x][R]
    std::vector<std::vector<Complex>> sums(grid.size());
    parallel_for(grid.size(), [&](std::size_t i) {
      sums[i] = summation::dunkl_partial_sums(alpha, spectrum, schedule, grid[i], rule);
    });
    std::vector<double> sup_errors;
    for (std::size_t r = 0; r < schedule.size(); ++r) {
      std::vector<Complex> diff(grid.size());
      double sup = 0.0;
      for (std::size_t i = 0; i < grid.size(); ++i) {
        diff[i] = sums[i][r] - tf.f(grid[i]);
        sup = std::max(sup, std::abs(diff[i]));
      }
      const double lp = funcspace::lp_norm(mu, SampledFunction(grid, std::move(diff)),
                                           config.lp_exponent);
      const double R = schedule.radii()[r];
      sup_errors.push_back(sup);
      table.add_row({id, fmt(R), fmt(sup), fmt(lp)});
      result.report.rows.push_back({{"function", id}, {"R", R}, {"sup_error", sup}, {"lp_error", lp}});
    }
    // Monotone decrease over the last three doublings (last four radii).
    bool monotone = true;
    const std::size_t n = sup_errors.size();
    for (std::size_t r = n >= 4 ? n - 3 : 1; r < n; ++r) {
      monotone = monotone && sup_errors[r] < sup_errors[r - 1];
    }
    all_monotone = all_monotone && monotone;
    worst_final = std::max(worst_final, sup_errors.back());
    per_function[id] = {{"final_sup_error", sup_errors.back()}, {"monotone_decrease", monotone}};
  }
  result.report.summary["per_function"] = per_function;
  result.report.summary["max_error"] = worst_final;
  result.report.summary["monotone_decrease"] = all_monotone;
  tails.finish(result);
  result.files["converge.csv"] = table_text(table);
  seal(result);
  return result;
}

RunResult cmd_weaktype(const Config& config) {
  if (!(config.alpha > -0.5)) {
    throw ConfigError(
        "weaktype needs alpha > -1/2: the Lorentz endpoint estimates are stated only for "
        "alpha > -1/2 (at alpha = -1/2 the upper endpoint p1 is infinite)");
  }
  RunResult result = start("weaktype", config);
  const Order alpha(config.alpha);
  const WeightedMeasure mu(alpha);
  const auto [p0, p1] = funcspace::endpoint_exponents(alpha);
  const double p = config.endpoint == 0 ? p0 : p1;
  TailLedger tails(config.tail_hard_cap);

  csv::Table table({"function", "p", "maximal_weak_norm", "f_lorentz_p1_norm", "ratio"});
  std::vector<double> constants;
  for (const std::string& id : config.battery_ids()) {
    const auto& tf = battery::find(id);
    const SampledFunction f = SampledFunction::sample(tf.f, config.grid_n, config.radius);
    const double denominator = funcspace::lorentz_norm(mu, f, LorentzIndex(p, 1.0));
    if (denominator == 0.0) {
      table.add_row({id, fmt(p), "", fmt(0.0), "skipped"});
      result.report.rows.push_back({{"function", id}, {"p", p}, {"ratio", "skipped"}});
      continue;
    }
    const MaximalSamples smax = maximal_function_samples(config, tf.f);
    tails.add(id, smax.tail);
    const double weak =
        funcspace::lorentz_norm(mu, smax.values, LorentzIndex(p, funcspace::kInfiniteExponent));
    const double ratio = weak / denominator;
    constants.push_back(ratio);
    table.add_row({id, fmt(p), fmt(weak), fmt(denominator), fmt(ratio)});
    result.report.rows.push_back({{"function", id},
                                  {"p", p},
                                  {"maximal_weak_norm", weak},
                                  {"f_lorentz_p1_norm", denominator},
                                  {"ratio", ratio}});
  }

  csv::Table power({"family", "p", "k", "weak_norm", "strong_norm", "strong_norm_pow_p"});
  json power_summary = json::object();
  const struct {
    const char* name;
    double exponent;
    double p;
  } families[] = {{"abs_x_pow_-(alpha+1/2)", config.alpha + 0.5, p1},
                  {"abs_x_pow_-(alpha+3/2)", config.alpha + 1.5, p0}};
  for (const auto& family : families) {
    std::vector<PowerNorms> norms;
    for (int k : config.power_windows) {
      norms.push_back(power_norms(alpha, family.exponent, family.p, k, config.cells_per_octave));
      const PowerNorms& n = norms.back();
      power.add_row({family.name, fmt(family.p), std::to_string(k), fmt(n.weak), fmt(n.strong),
                     fmt(n.modular)});
    }
    power_summary[family.name] = {
        {"p", family.p},
        {"weak_norm_relative_change", std::abs(norms.back().weak / norms.front().weak - 1.0)},
        {"strong_norm_growth", norms.back().strong / norms.front().strong - 1.0},
        {"strong_norm_pow_p_growth", norms.back().modular / norms.front().modular - 1.0}};
  }

  json& s = result.report.summary;
  s["endpoint"] = config.endpoint;
  s["p"] = p;
  s["p0"] = p0;
  s["p1"] = exponent_json(p1);
  s["observed_constant"] = max_value(constants);
  if (!constants.empty()) {
    const double lo = *std::min_element(constants.begin(), constants.end());
    s["min_constant"] = lo;
    s["constant_variation_factor"] = max_value(constants) / lo;
    s["all_finite"] = std::all_of(constants.begin(), constants.end(),
                                  [](double c) { return std::isfinite(c); });
  }
  s["power_functions"] = power_summary;
  tails.finish(result);
  result.files["weaktype.csv"] = table_text(table);
  result.files["power.csv"] = table_text(power);
  seal(result);
  return result;
}

RunResult cmd_prange(const Config& config) {
  RunResult result = start("prange", config);
  const Order alpha(config.alpha);
  const WeightedMeasure mu(alpha);
  const auto [p0, p1] = funcspace::endpoint_exponents(alpha);
  TailLedger tails(config.tail_hard_cap);

  csv::Table verdicts({"p", "p0", "p1", "in_range", "ap_weight", "agree"});
  std::size_t agreed = 0;
  for (double p : config.p_values) {
    const bool in_range = p0 < p && p < p1;
    const bool ap = funcspace::ap_power_weight_check(alpha, p);
    agreed += in_range == ap ? 1 : 0;
    verdicts.add_row({fmt(p), fmt(p0), std::isinf(p1) ? "inf" : fmt(p1), in_range ? "true" : "false",
                      ap ? "true" : "false", in_range == ap ? "true" : "false"});
    result.report.rows.push_back(
        {{"p", p}, {"in_range", in_range}, {"ap_weight", ap}, {"agree", in_range == ap}});
  }

  csv::Table ratios({"function", "p", "maximal_lp_norm", "f_lp_norm", "ratio"});
  json constants = json::object();
  for (const std::string& id : config.battery_ids()) {
    const auto& tf = battery::find(id);
    const SampledFunction f = SampledFunction::sample(tf.f, config.grid_n, config.radius);
    const MaximalSamples smax = maximal_function_samples(config, tf.f);
    tails.add(id, smax.tail);
    for (double p : config.p_values) {
      const double denominator = funcspace::lp_norm(mu, f, p);
      const double numerator = funcspace::lp_norm(mu, smax.values, p);
      const std::string ratio = denominator == 0.0 ? "skipped" : fmt(numerator / denominator);
      ratios.add_row({id, fmt(p), fmt(numerator), fmt(denominator), ratio});
      if (denominator != 0.0) {
        const double c = numerator / denominator;
        constants[fmt(p)] = std::max(constants.value(fmt(p), 0.0), c);
      }
    }
  }

  const SweepResult sweep = range_equivalence_sweep(config.sweep_n);
  json& s = result.report.summary;
  s["p0"] = p0;
  s["p1"] = exponent_json(p1);
  s["verdict_agreement"] =
      config.p_values.empty() ? 1.0
                              : static_cast<double>(agreed) / static_cast<double>(config.p_values.size());
  s["sweep"] = {{"n", config.sweep_n},
                {"compared", sweep.compared},
                {"agreed", sweep.agreed},
                {"skipped_boundary", sweep.skipped},
                {"agreement", static_cast<double>(sweep.agreed) /
                                  static_cast<double>(std::max<std::size_t>(1, sweep.compared))}};
  s["observed_constant_by_p"] = constants;
  tails.finish(result);
  result.files["prange.csv"] = table_text(verdicts);
  result.files["ratios.csv"] = table_text(ratios);
  seal(result);
  return result;
}

void write_outputs(const std::filesystem::path& dir, const RunResult& result) {
  std::filesystem::create_directories(dir);
  for (const auto& [name, content] : result.files) {
    std::ofstream out(dir / name, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + (dir / name).string());
    out << content;
  }
}

// ---------------------------------------------------------------- CLI

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dunkl transform, partial sums and maximal-operator experiments"};
  app.require_subcommand(1);

  struct Options {
    std::string config_path;
    std::string out_dir = "out";
    double alpha = 0.0;
    std::size_t grid_n = 0;
    double radius = 0.0;
    double rmax = 0.0;
    std::string function;
    int endpoint = 1;
  } opt;

  using Command = std::function<RunResult(const Config&)>;
  const std::vector<std::tuple<std::string, std::string, Command>> commands = {
      {"transform", "Dunkl transform by both routes and the decomposition residual",
       cmd_transform},
      {"converge", "Partial-sum convergence S_R f -> f over an R schedule", cmd_converge},
      {"weaktype", "Restricted weak-type constants at an endpoint exponent", cmd_weaktype},
      {"prange", "Boundedness-range verdicts and empirical L^p ratios", cmd_prange},
  };

  struct Bound {
    CLI::App* app;
    Command run;
    CLI::Option* alpha;
    CLI::Option* grid_n;
    CLI::Option* radius;
    CLI::Option* rmax;
    CLI::Option* function;
    CLI::Option* endpoint;
  };
  std::vector<Bound> bound;
  for (const auto& [name, help, run] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--config", opt.config_path, "JSON config file");
    sub->add_option("--out", opt.out_dir, "Output directory")->capture_default_str();
    Bound b{sub, run, nullptr, nullptr, nullptr, nullptr, nullptr, nullptr};
    b.alpha = sub->add_option("--alpha", opt.alpha, "Dunkl order alpha >= -1/2");
    b.grid_n = sub->add_option("--grid-n", opt.grid_n, "x-grid node count (even)");
    b.radius = sub->add_option("--radius", opt.radius, "Truncation radius of x-integrals");
    b.rmax = sub->add_option("--rmax", opt.rmax, "Largest partial-sum radius");
    b.function = sub->add_option("--function", opt.function, "Test function id");
    b.endpoint = sub->add_option("--endpoint", opt.endpoint, "Endpoint index (0 or 1)");
    bound.push_back(b);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  }

  for (const Bound& b : bound) {
    if (!b.app->parsed()) continue;
    RunResult result;
    try {
      Config config;
      if (!opt.config_path.empty()) {
        std::ifstream in(opt.config_path);
        if (!in) throw ConfigError("cannot open config file " + opt.config_path);
        json j;
        try {
          j = json::parse(in);
        } catch (const json::exception& e) {
          throw ConfigError(std::string("config is not valid JSON: ") + e.what());
        }
        config = Config::from_json(j, config);
      }
      if (b.alpha->count() > 0) config.alpha = opt.alpha;
      if (b.grid_n->count() > 0) config.grid_n = opt.grid_n;
      if (b.radius->count() > 0) config.radius = opt.radius;
      if (b.rmax->count() > 0) config.rmax = opt.rmax;
      if (b.function->count() > 0) {
        config.function = opt.function;
        config.functions = {opt.function};
      }
      if (b.endpoint->count() > 0) config.endpoint = opt.endpoint;
      result = b.run(config);
    } catch (const ConfigError& e) {
      err << "config error: " << e.what() << "\n";
      return kExitConfig;
    } catch (const DomainError& e) {
      err << "config error: " << e.what() << "\n";
      return kExitConfig;
    }
    try {
      write_outputs(opt.out_dir, result);
    } catch (const std::exception& e) {
      err << "error: " << e.what() << "\n";
      return 1;
    }
    out << result.report.experiment_name << ": wrote " << result.files.size() << " files to "
        << opt.out_dir << "\n";
    if (result.exit_code == kExitNumerical) {
      err << "numerical quality failure: tail diagnostic exceeded tail_hard_cap\n";
    }
    return result.exit_code;
  }
  return kExitConfig;
}

}  // namespace dunkl::experiments
