#ifndef DUNKL_QUADRATURE_HPP
#define DUNKL_QUADRATURE_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include "dunkl/errors.hpp"

namespace dunkl::quadrature {

using Complex = std::complex<double>;

/// Panelized Gauss-Legendre configuration.
///
/// Panels on [a, b] are equal-width, with width at most
/// min(max_panel_width, pi / (2 * max(oscillation_frequency_hint, 1))), so an
/// integrand oscillating like cos(hint * x) gets a panel per quarter period.
struct QuadratureRule {
  int nodes_per_panel = 16;
  double max_panel_width = 0.5;
  double truncation_radius = 12.0;
  double oscillation_frequency_hint = 0.0;

  /// Throws DomainError when a field is out of range.
  void validate() const;
  double effective_panel_width() const;
  QuadratureRule with_frequency_hint(double hint) const;
  QuadratureRule with_truncation_radius(double radius) const;
};

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Cached rule with n nodes, 1 <= n <= 128. Thread-safe.
const GaussLegendre& gauss_legendre(int n);

struct Estimate {
  Complex value;
  /// Sum over panels of |Q_n - Q_{n/2}| plus a roundoff floor.
  double error_estimate = 0.0;
};

struct HalfLineResult {
  Complex value;
  /// |f(truncation_radius)| * truncation_radius.
  double tail_estimate = 0.0;
  /// Set when tail_estimate exceeds kTailWarningRelative * |value|.
  bool tail_warning = false;
};

inline constexpr double kTailWarningRelative = 1e-8;

namespace detail {

template <class F>
Complex evaluate(F& f, double x) {
  const Complex v = Complex(f(x));
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
    throw EvaluationError("integrand is not finite at x = " + std::to_string(x), x);
  }
  return v;
}

template <class F>
Complex panel(F& f, double lo, double hi, const GaussLegendre& gl) {
  const double half = 0.5 * (hi - lo);
  const double mid = 0.5 * (hi + lo);
  Complex sum = 0.0;
  for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
    sum += gl.weights[i] * evaluate(f, mid + half * gl.nodes[i]);
  }
  return half * sum;
}

inline std::size_t panel_count(double a, double b, const QuadratureRule& rule) {
  const double width = rule.effective_panel_width();
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil((b - a) / width - 1e-12)));
}

inline void check_interval(double a, double b) {
  if (!(a <= b)) {
    throw DomainError("integration interval requires a <= b, got [" + std::to_string(a) + ", " +
                      std::to_string(b) + "]");
  }
}

}  // namespace detail

/// Composite Gauss-Legendre estimate of the integral of f over [a, b].
/// Panels are summed in ascending order so results are bit-reproducible.
template <class F>
Complex integrate_finite(F&& f, double a, double b, const QuadratureRule& rule) {
  rule.validate();
  detail::check_interval(a, b);
  if (a == b) return 0.0;
  const GaussLegendre& gl = gauss_legendre(rule.nodes_per_panel);
  const std::size_t n = detail::panel_count(a, b, rule);
  const double width = (b - a) / static_cast<double>(n);
  Complex total = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double lo = a + width * static_cast<double>(k);
    const double hi = (k + 1 == n) ? b : lo + width;
    total += detail::panel(f, lo, hi, gl);
  }
  return total;
}

/// As integrate_finite, plus an error estimate from an embedded lower-order rule.
template <class F>
Estimate integrate_finite_estimate(F&& f, double a, double b, const QuadratureRule& rule) {
  rule.validate();
  detail::check_interval(a, b);
  if (a == b) return {0.0, 0.0};
  const GaussLegendre& gl = gauss_legendre(rule.nodes_per_panel);
  const GaussLegendre& coarse = gauss_legendre(std::max(1, rule.nodes_per_panel / 2));
  const std::size_t n = detail::panel_count(a, b, rule);
  const double width = (b - a) / static_cast<double>(n);
  Complex total = 0.0;
  double error = 0.0;
  double magnitude = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double lo = a + width * static_cast<double>(k);
    const double hi = (k + 1 == n) ? b : lo + width;
    const Complex fine = detail::panel(f, lo, hi, gl);
    total += fine;
    error += std::abs(fine - detail::panel(f, lo, hi, coarse));
    magnitude += std::abs(fine);
  }
  constexpr double kRoundoff = 64.0 * std::numeric_limits<double>::epsilon();
  return {total, error + kRoundoff * magnitude};
}

/// Integral of f over [0, truncation_radius] standing in for [0, infinity).
template <class F>
HalfLineResult integrate_halfline(F&& f, const QuadratureRule& rule) {
  const double radius = rule.truncation_radius;
  HalfLineResult out;
  out.value = integrate_finite(f, 0.0, radius, rule);
  out.tail_estimate = std::abs(detail::evaluate(f, radius)) * radius;
  out.tail_warning = out.tail_estimate > kTailWarningRelative * std::abs(out.value);
  return out;
}

}  // namespace dunkl::quadrature

#endif  // DUNKL_QUADRATURE_HPP
