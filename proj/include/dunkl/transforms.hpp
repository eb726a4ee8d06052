#ifndef DUNKL_TRANSFORMS_HPP
#define DUNKL_TRANSFORMS_HPP

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "dunkl/funcspace.hpp"
#include "dunkl/quadrature.hpp"
#include "dunkl/specfun.hpp"

namespace dunkl::transforms {

using Complex = std::complex<double>;
using Signal = std::function<Complex(double)>;
using quadrature::QuadratureRule;
using specfun::Order;

enum class SpectrumKind {
  Dunkl,   // frequencies on R
  Hankel,  // frequencies in [0, inf), even continuation
};

/// Aggregate truncation diagnostics over all frequencies of a transform.
struct TailDiagnostics {
  double max_tail_estimate = 0.0;
  /// max_tail_estimate / max |value|; 0 for an identically zero spectrum.
  double relative_to_peak = 0.0;
  bool warning = false;
};

/// Transform values on a caller-chosen, strictly increasing frequency grid.
class Spectrum {
 public:
  Spectrum(std::vector<double> frequencies, std::vector<Complex> values, Order order,
           SpectrumKind kind, TailDiagnostics tail = {});

  const std::vector<double>& frequencies() const noexcept { return frequencies_; }
  const std::vector<Complex>& values() const noexcept { return values_; }
  Order order() const noexcept { return order_; }
  SpectrumKind kind() const noexcept { return kind_; }
  const TailDiagnostics& tail() const noexcept { return tail_; }
  std::size_t size() const noexcept { return frequencies_.size(); }

  /// Largest R such that [-R, R] (Dunkl) or [0, R] (Hankel) is covered.
  double coverage() const;
  /// Degree-7 local Lagrange interpolation; Hankel spectra are continued evenly.
  Complex operator()(double y) const;

 private:
  std::vector<double> frequencies_;
  std::vector<Complex> values_;
  Order order_;
  SpectrumKind kind_;
  TailDiagnostics tail_;
};

/// n equally spaced frequencies from -y_max to y_max, exactly symmetric (0 included when n is odd).
std::vector<double> frequency_grid(std::size_t n, double y_max);
/// The nonnegative half of frequency_grid(n, y_max).
std::vector<double> positive_frequency_grid(std::size_t n, double y_max);

/// x -> (f(x) + f(-x)) / 2.
Signal even_part(Signal f);
/// x -> (f(x) - f(-x)) / (2x), the odd part divided by x (never evaluated at 0).
Signal odd_part_over_x(Signal f);

/// H_beta g(y) = int_0^inf g(x) j_beta(yx) x^(2 beta + 1) dx for each y >= 0.
Spectrum hankel_transform(Order beta, const Signal& g, std::span<const double> frequencies,
                          const QuadratureRule& rule);
Spectrum hankel_transform(Order beta, const funcspace::HalfLineFunction& g,
                          std::span<const double> frequencies, const QuadratureRule& rule);

/// D_alpha f(y) = int_R f(x) E_alpha(-ixy) d mu_alpha(x).
Spectrum dunkl_transform(Order alpha, const Signal& f, std::span<const double> frequencies,
                         const QuadratureRule& rule);
Spectrum dunkl_transform(Order alpha, const funcspace::SampledFunction& f,
                         std::span<const double> frequencies, const QuadratureRule& rule);

/// H_alpha(f_e) and H_{alpha+1}(f_o / x) on a common nonnegative frequency grid.
struct HankelPair {
  Spectrum even;  // order alpha
  Spectrum odd;   // order alpha + 1
};

HankelPair hankel_components(Order alpha, const Signal& f,
                             std::span<const double> nonnegative_frequencies,
                             const QuadratureRule& rule);

/// D_alpha f(y) = H_alpha(f_e)(|y|) - i y H_{alpha+1}(f_o / x)(|y|).
Spectrum dunkl_via_hankel(Order alpha, const Signal& f, std::span<const double> frequencies,
                          const QuadratureRule& rule);
Spectrum dunkl_via_hankel(Order alpha, const funcspace::SampledFunction& f,
                          std::span<const double> frequencies, const QuadratureRule& rule);

/// Inverse transform: int D(y) E_alpha(ixy) d mu_alpha(y) over the spectrum's coverage,
/// evaluated at the given (symmetric, 0-free) points.
funcspace::SampledFunction inverse_dunkl(Order alpha, const Spectrum& spectrum,
                                         std::vector<double> points, const QuadratureRule& rule);

/// Max over frequencies of |a - b|; the grids must match.
double max_abs_difference(const Spectrum& a, const Spectrum& b);

}  // namespace dunkl::transforms

#endif  // DUNKL_TRANSFORMS_HPP
