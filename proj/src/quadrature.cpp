#include "dunkl/quadrature.hpp"

#include <array>
#include <limits>

namespace dunkl::quadrature {

namespace {

constexpr int kMaxNodes = 128;

// Newton iteration on P_n from the Chebyshev-like initial guess.
GaussLegendre build(int n) {
  GaussLegendre gl;
  gl.nodes.resize(n);
  gl.weights.resize(n);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double derivative = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = 0.0;
      for (int j = 1; j <= n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p2) / j;
      }
      derivative = n * (x * p0 - p1) / (x * x - 1.0);
      const double step = p0 / derivative;
      x -= step;
      if (std::abs(step) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * derivative * derivative);
    gl.nodes[i] = -x;
    gl.nodes[n - 1 - i] = x;
    gl.weights[i] = w;
    gl.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) gl.nodes[n / 2] = 0.0;
  return gl;
}

}  // namespace

const GaussLegendre& gauss_legendre(int n) {
  static const std::array<GaussLegendre, kMaxNodes + 1> table = [] {
    std::array<GaussLegendre, kMaxNodes + 1> t;
    for (int k = 1; k <= kMaxNodes; ++k) t[k] = build(k);
    return t;
  }();
  if (n < 1 || n > kMaxNodes) {
    throw DomainError("Gauss-Legendre order must lie in [1, 128], got " + std::to_string(n));
  }
  return table[n];
}

void QuadratureRule::validate() const {
  if (nodes_per_panel < 4 || nodes_per_panel > kMaxNodes) {
    throw DomainError("nodes_per_panel must lie in [4, 128], got " +
                      std::to_string(nodes_per_panel));
  }
  if (!(max_panel_width > 0.0) || !std::isfinite(max_panel_width)) {
    throw DomainError("max_panel_width must be positive and finite");
  }
  if (!(truncation_radius > 0.0) || !std::isfinite(truncation_radius)) {
    throw DomainError("truncation_radius must be positive and finite");
  }
  if (!(oscillation_frequency_hint >= 0.0) || !std::isfinite(oscillation_frequency_hint)) {
    throw DomainError("oscillation_frequency_hint must be finite and >= 0");
  }
}

double QuadratureRule::effective_panel_width() const {
  const double oscillation_cap =
      std::numbers::pi / (2.0 * std::max(oscillation_frequency_hint, 1.0));
  return std::min(max_panel_width, oscillation_cap);
}

QuadratureRule QuadratureRule::with_frequency_hint(double hint) const {
  QuadratureRule r = *this;
  r.oscillation_frequency_hint = std::abs(hint);
  return r;
}

QuadratureRule QuadratureRule::with_truncation_radius(double radius) const {
  QuadratureRule r = *this;
  r.truncation_radius = radius;
  return r;
}

}  // namespace dunkl::quadrature
