#ifndef DUNKL_EXPERIMENTS_HPP
#define DUNKL_EXPERIMENTS_HPP

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "dunkl/funcspace.hpp"
#include "dunkl/quadrature.hpp"
#include "dunkl/summation.hpp"

namespace dunkl::experiments {

using json = nlohmann::json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNumerical = 3;

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Effective settings of one run. JSON keys match the field names.
struct Config {
  double alpha = 0.0;
  std::string function = "gaussian";          // transform
  std::vector<std::string> functions;         // converge / weaktype / prange; empty = core battery
  std::size_t grid_n = 512;                   // x-grid nodes
  double x_max = 3.0;                         // converge evaluation window
  double radius = 12.0;                       // truncation radius of x-integrals
  double rmax = 64.0;                         // largest partial-sum radius
  double r_min = 0.25;
  std::size_t log_radii = 64;
  std::size_t linear_radii = 64;
  std::size_t freq_n = 129;                   // transform output frequencies
  double freq_max = 8.0;
  std::size_t spectrum_n = 2048;              // spectra feeding partial sums
  int nodes_per_panel = 16;
  double max_panel_width = 0.5;
  std::vector<double> r_schedule = {2.0, 4.0, 8.0, 16.0};
  double lp_exponent = 2.0;
  int endpoint = 1;                           // weaktype: 0 -> p0, 1 -> p1
  std::size_t norm_grid_n = 128;              // x-grid for maximal-function norms
  double norm_x_max = 8.0;
  std::vector<double> p_values = {1.2, 1.5, 2.0, 3.0, 4.0, 5.0};
  std::vector<int> power_windows = {4, 5, 6, 7, 8};
  std::size_t cells_per_octave = 64;
  std::size_t sweep_n = 50;
  double tail_hard_cap = 1e-6;

  /// Throws ConfigError on any invalid field.
  void validate() const;
  json to_json() const;
  /// Overlays the keys present in j onto base; unknown keys are rejected.
  static Config from_json(const json& j, Config base);
  static Config from_json(const json& j);

  std::vector<std::string> battery_ids() const;
  quadrature::QuadratureRule rule() const;
  summation::RadiusGrid radius_grid() const;
};

/// Structured record of one run.
struct ExperimentReport {
  std::string experiment_name;
  json parameters = json::object();
  json rows = json::array();
  json summary = json::object();
  json tail_diagnostics = json::array();

  json to_json() const;
};

struct RunResult {
  int exit_code = kExitOk;
  ExperimentReport report;
  /// Output file name -> content, including report.json.
  std::map<std::string, std::string> files;
};

RunResult cmd_transform(const Config& config);
RunResult cmd_converge(const Config& config);
RunResult cmd_weaktype(const Config& config);
RunResult cmd_prange(const Config& config);

/// |x|^(-exponent) on 2^-k <= |x| <= 2^k, zero elsewhere, on geometric cells
/// (cells_per_octave per octave) valued at their geometric midpoints.
funcspace::SampledFunction truncated_power(double exponent, int k, std::size_t cells_per_octave);

struct PowerNorms {
  double weak;     // ||f||_{p, inf}
  double strong;   // ||f||_p
  double modular;  // ||f||_p^p
};

PowerNorms power_norms(specfun::Order alpha, double exponent, double p, int k,
                       std::size_t cells_per_octave);

/// S_* f sampled on the offset grid of norm_grid_n nodes over [-norm_x_max, norm_x_max].
struct MaximalSamples {
  funcspace::SampledFunction values;
  transforms::TailDiagnostics tail;
};

MaximalSamples maximal_function_samples(const Config& config, const transforms::Signal& f);

/// Fraction of cells of an n x n sweep over alpha in [-0.49, 3], p in (1, 8] where the
/// A_p exponent test agrees with p0 < p < p1; cells within 1e-12 of an endpoint are skipped.
struct SweepResult {
  std::size_t compared = 0;
  std::size_t agreed = 0;
  std::size_t skipped = 0;
};

SweepResult range_equivalence_sweep(std::size_t n);

void write_outputs(const std::filesystem::path& dir, const RunResult& result);

/// Full command-line entry point; returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dunkl::experiments

#endif  // DUNKL_EXPERIMENTS_HPP
