#ifndef DUNKL_FUNCSPACE_HPP
#define DUNKL_FUNCSPACE_HPP

#include <complex>
#include <cstddef>
#include <limits>
#include <utility>
#include <vector>

#include "dunkl/interpolation.hpp"
#include "dunkl/specfun.hpp"

namespace dunkl::funcspace {

using Complex = std::complex<double>;
using specfun::Order;

/// Complex samples on a grid symmetric about 0 that never contains 0.
///
/// Each node owns a cell; by default the cell edges are the midpoints between
/// neighbouring nodes (the two innermost cells meet exactly at 0) and the
/// outer edges sit half a spacing beyond the outermost nodes. The function is
/// zero beyond the outer edges. For norms and rearrangements |f| is constant
/// on each cell (its node value). Pointwise evaluation interpolates.
class SampledFunction {
 public:
  SampledFunction(std::vector<double> grid, std::vector<Complex> values);

  /// Explicit cell edges; edges must be symmetric, include 0, and bracket each node.
  static SampledFunction with_cells(std::vector<double> edges, std::vector<double> grid,
                                    std::vector<Complex> values);

  /// n nodes (n even) at -L + (i + 1/2) 2L/n, mirrored so the grid is exactly symmetric.
  static std::vector<double> offset_grid(std::size_t n, double half_width);

  template <class F>
  static SampledFunction sample(F&& f, std::size_t n, double half_width) {
    std::vector<double> grid = offset_grid(n, half_width);
    std::vector<Complex> values;
    values.reserve(grid.size());
    for (double x : grid) values.push_back(Complex(f(x)));
    return SampledFunction(std::move(grid), std::move(values));
  }

  const std::vector<double>& grid() const noexcept { return grid_; }
  const std::vector<Complex>& values() const noexcept { return values_; }
  const std::vector<double>& edges() const noexcept { return edges_; }
  std::size_t size() const noexcept { return grid_.size(); }

  /// Interpolated value; zero outside [edges().front(), edges().back()].
  Complex operator()(double x) const;

  SampledFunction scaled(Complex factor) const;

 private:
  SampledFunction(std::vector<double> grid, std::vector<Complex> values,
                  std::vector<double> edges);
  void validate() const;

  std::vector<double> grid_;
  std::vector<Complex> values_;
  std::vector<double> edges_;
};

/// Samples on (0, infinity) with a known parity used to interpolate near 0.
class HalfLineFunction {
 public:
  HalfLineFunction(std::vector<double> grid, std::vector<Complex> values,
                   interpolation::Parity parity);

  const std::vector<double>& grid() const noexcept { return grid_; }
  const std::vector<Complex>& values() const noexcept { return values_; }
  interpolation::Parity parity() const noexcept { return parity_; }

  /// Interpolated value for x >= 0; zero beyond half a spacing past the last node.
  Complex operator()(double x) const;

 private:
  std::vector<double> grid_;
  std::vector<Complex> values_;
  interpolation::Parity parity_;
  double outer_edge_;
};

/// d mu_alpha(x) = |x|^(2 alpha + 1) dx / (2^(alpha + 1) Gamma(alpha + 1)).
class WeightedMeasure {
 public:
  explicit WeightedMeasure(Order alpha);

  Order alpha() const noexcept { return alpha_; }
  double normalization() const noexcept { return normalization_; }
  double density(double x) const;
  /// Exact mu_alpha([a, b]) for a <= b.
  double mass(double a, double b) const;

 private:
  Order alpha_;
  double normalization_;
};

inline constexpr double kInfiniteExponent = std::numeric_limits<double>::infinity();

/// Lorentz indices (p, q), 1 <= p < inf, 1 <= q <= inf.
struct LorentzIndex {
  double p;
  double q;

  LorentzIndex(double p, double q);
  bool weak() const noexcept { return q == kInfiniteExponent; }
};

/// Nonincreasing rearrangement of |f| as a step function.
///
/// levels are the distinct nonzero values of |f| in decreasing order and
/// cumulative_mass[k] = mu{ |f| >= levels[k] }, so f*(t) = levels[k] on
/// [cumulative_mass[k-1], cumulative_mass[k]).
struct Rearrangement {
  std::vector<double> levels;
  std::vector<double> cumulative_mass;

  double operator()(double t) const;
  double total_mass() const { return cumulative_mass.empty() ? 0.0 : cumulative_mass.back(); }
};

std::vector<double> cell_masses(const WeightedMeasure& mu, const SampledFunction& f);
Rearrangement rearrange(const WeightedMeasure& mu, const SampledFunction& f);

/// Distribution function d_f(s) = mu{ |f| > s }.
double measure_of_sublevel(const WeightedMeasure& mu, const SampledFunction& f, double s);
/// f*(t) = inf{ s > 0 : d_f(s) <= t }.
double rearrangement(const WeightedMeasure& mu, const SampledFunction& f, double t);
double lp_norm(const WeightedMeasure& mu, const SampledFunction& f, double p);
double lorentz_norm(const WeightedMeasure& mu, const SampledFunction& f, LorentzIndex idx);
double lorentz_norm(const Rearrangement& r, LorentzIndex idx);

/// (f_e, f_o) restricted to the positive nodes of f's grid.
std::pair<HalfLineFunction, HalfLineFunction> even_odd_split(const SampledFunction& f);

struct EndpointExponents {
  double p0;
  double p1;  // kInfiniteExponent when 2 alpha + 1 = 0
};

/// p0 = 4(alpha+1)/(2alpha+3), p1 = 4(alpha+1)/(2alpha+1).
EndpointExponents endpoint_exponents(Order alpha);

/// Exponent 2 alpha + 1 - p (alpha + 1/2) of the power weight.
double power_weight_exponent(Order alpha, double p);

/// Whether |x|^(2 alpha + 1 - p(alpha + 1/2)) is an A_p weight on R,
/// i.e. -1 < exponent < p - 1. Requires p > 1.
bool ap_power_weight_check(Order alpha, double p);

}  // namespace dunkl::funcspace

#endif  // DUNKL_FUNCSPACE_HPP
