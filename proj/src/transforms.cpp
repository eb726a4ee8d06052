#include "dunkl/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "dunkl/errors.hpp"
#include "dunkl/parallel.hpp"

namespace dunkl::transforms {

namespace {

using quadrature::HalfLineResult;

TailDiagnostics summarize_tails(const std::vector<Complex>& values,
                                const std::vector<double>& tails) {
  TailDiagnostics d;
  double peak = 0.0;
  for (const Complex& v : values) peak = std::max(peak, std::abs(v));
  for (double t : tails) d.max_tail_estimate = std::max(d.max_tail_estimate, t);
  if (peak > 0.0) {
    d.relative_to_peak = d.max_tail_estimate / peak;
  } else if (d.max_tail_estimate > 0.0) {
    d.relative_to_peak = std::numeric_limits<double>::infinity();
  }
  d.warning = d.relative_to_peak > quadrature::kTailWarningRelative;
  return d;
}

TailDiagnostics merge(const TailDiagnostics& a, const TailDiagnostics& b) {
  return {std::max(a.max_tail_estimate, b.max_tail_estimate),
          std::max(a.relative_to_peak, b.relative_to_peak), a.warning || b.warning};
}

std::vector<double> to_vector(std::span<const double> s) { return {s.begin(), s.end()}; }

void require_nonnegative(std::span<const double> frequencies) {
  for (double y : frequencies) {
    if (!(y >= 0.0)) throw DomainError("Hankel frequencies must be >= 0");
  }
}

Signal as_signal(const funcspace::SampledFunction& f) {
  return [f](double x) { return f(x); };
}

}  // namespace

Spectrum::Spectrum(std::vector<double> frequencies, std::vector<Complex> values, Order order,
                   SpectrumKind kind, TailDiagnostics tail)
    : frequencies_(std::move(frequencies)),
      values_(std::move(values)),
      order_(order),
      kind_(kind),
      tail_(tail) {
  if (frequencies_.empty()) throw DomainError("spectrum needs at least one frequency");
  if (frequencies_.size() != values_.size()) {
    throw DomainError("spectrum frequencies and values differ in length");
  }
  for (std::size_t i = 0; i < frequencies_.size(); ++i) {
    if (!std::isfinite(frequencies_[i])) throw DomainError("spectrum frequencies must be finite");
    if (i > 0 && !(frequencies_[i] > frequencies_[i - 1])) {
      throw DomainError("spectrum frequencies must be strictly increasing");
    }
    if (!std::isfinite(values_[i].real()) || !std::isfinite(values_[i].imag())) {
      throw DomainError("spectrum values must be finite");
    }
  }
  if (kind_ == SpectrumKind::Hankel) require_nonnegative(frequencies_);
}

double Spectrum::coverage() const {
  if (kind_ == SpectrumKind::Hankel) return frequencies_.back();
  return std::max(0.0, std::min(-frequencies_.front(), frequencies_.back()));
}

Complex Spectrum::operator()(double y) const {
  if (kind_ == SpectrumKind::Hankel) {
    return interpolation::lagrange(frequencies_, values_, std::abs(y),
                                   interpolation::Parity::Even);
  }
  return interpolation::lagrange(frequencies_, values_, y);
}

std::vector<double> frequency_grid(std::size_t n, double y_max) {
  if (n < 2) throw DomainError("frequency grid needs at least 2 points");
  if (!(y_max > 0.0) || !std::isfinite(y_max)) {
    throw DomainError("frequency grid needs a positive y_max");
  }
  // Fill the upper half and mirror it so the grid is exactly symmetric.
  std::vector<double> grid(n);
  const double h = 2.0 * y_max / static_cast<double>(n - 1);
  for (std::size_t i = n / 2; i < n; ++i) {
    const double offset = static_cast<double>(i) - 0.5 * static_cast<double>(n - 1);
    grid[i] = i + 1 == n ? y_max : offset * h;
    grid[n - 1 - i] = -grid[i];
  }
  if (n % 2 == 1) grid[n / 2] = 0.0;
  return grid;
}

std::vector<double> positive_frequency_grid(std::size_t n, double y_max) {
  std::vector<double> full = frequency_grid(n, y_max);
  return {full.begin() + static_cast<long>(n / 2), full.end()};
}

Signal even_part(Signal f) {
  return [f = std::move(f)](double x) { return 0.5 * (f(x) + f(-x)); };
}

Signal odd_part_over_x(Signal f) {
  return [f = std::move(f)](double x) { return (f(x) - f(-x)) / (2.0 * x); };
}

Spectrum hankel_transform(Order beta, const Signal& g, std::span<const double> frequencies,
                          const QuadratureRule& rule) {
  rule.validate();
  require_nonnegative(frequencies);
  const specfun::NormalizedBessel kernel(beta);
  const double weight_power = 2.0 * beta.value() + 1.0;
  std::vector<Complex> values(frequencies.size());
  std::vector<double> tails(frequencies.size());
  parallel_for(frequencies.size(), [&](std::size_t k) {
    const double y = frequencies[k];
    const HalfLineResult r = quadrature::integrate_halfline(
        [&](double x) { return g(x) * (kernel(y * x) * std::pow(x, weight_power)); },
        rule.with_frequency_hint(y));
    values[k] = r.value;
    tails[k] = r.tail_estimate;
  });
  TailDiagnostics tail = summarize_tails(values, tails);
  return Spectrum(to_vector(frequencies), std::move(values), beta, SpectrumKind::Hankel, tail);
}

Spectrum hankel_transform(Order beta, const funcspace::HalfLineFunction& g,
                          std::span<const double> frequencies, const QuadratureRule& rule) {
  return hankel_transform(
      beta, [g](double x) { return g(x); }, frequencies, rule);
}

Spectrum dunkl_transform(Order alpha, const Signal& f, std::span<const double> frequencies,
                         const QuadratureRule& rule) {
  rule.validate();
  const specfun::DunklKernel kernel(alpha);
  const funcspace::WeightedMeasure mu(alpha);
  const double weight_power = 2.0 * alpha.value() + 1.0;
  const double c = mu.normalization();
  std::vector<Complex> values(frequencies.size());
  std::vector<double> tails(frequencies.size());
  parallel_for(frequencies.size(), [&](std::size_t k) {
    const double y = frequencies[k];
    // Fold the integral over R onto (0, inf): E(-ixy) at x and its conjugate at -x.
    const HalfLineResult r = quadrature::integrate_halfline(
        [&](double x) {
          const Complex e = kernel(-x * y);
          return c * (f(x) * e + f(-x) * std::conj(e)) * std::pow(x, weight_power);
        },
        rule.with_frequency_hint(y));
    values[k] = r.value;
    tails[k] = r.tail_estimate;
  });
  TailDiagnostics tail = summarize_tails(values, tails);
  return Spectrum(to_vector(frequencies), std::move(values), alpha, SpectrumKind::Dunkl, tail);
}

Spectrum dunkl_transform(Order alpha, const funcspace::SampledFunction& f,
                         std::span<const double> frequencies, const QuadratureRule& rule) {
  return dunkl_transform(alpha, as_signal(f), frequencies, rule);
}

HankelPair hankel_components(Order alpha, const Signal& f,
                             std::span<const double> nonnegative_frequencies,
                             const QuadratureRule& rule) {
  return {hankel_transform(alpha, even_part(f), nonnegative_frequencies, rule),
          hankel_transform(alpha.next(), odd_part_over_x(f), nonnegative_frequencies, rule)};
}

Spectrum dunkl_via_hankel(Order alpha, const Signal& f, std::span<const double> frequencies,
                          const QuadratureRule& rule) {
  std::vector<double> magnitudes;
  magnitudes.reserve(frequencies.size());
  for (double y : frequencies) magnitudes.push_back(std::abs(y));
  std::sort(magnitudes.begin(), magnitudes.end());
  magnitudes.erase(std::unique(magnitudes.begin(), magnitudes.end()), magnitudes.end());

  const HankelPair parts = hankel_components(alpha, f, magnitudes, rule);
  std::vector<Complex> values;
  values.reserve(frequencies.size());
  for (double y : frequencies) {
    const auto k = static_cast<std::size_t>(
        std::lower_bound(magnitudes.begin(), magnitudes.end(), std::abs(y)) - magnitudes.begin());
    values.push_back(parts.even.values()[k] - Complex(0.0, y) * parts.odd.values()[k]);
  }
  return Spectrum(to_vector(frequencies), std::move(values), alpha, SpectrumKind::Dunkl,
                  merge(parts.even.tail(), parts.odd.tail()));
}

Spectrum dunkl_via_hankel(Order alpha, const funcspace::SampledFunction& f,
                          std::span<const double> frequencies, const QuadratureRule& rule) {
  return dunkl_via_hankel(alpha, as_signal(f), frequencies, rule);
}

funcspace::SampledFunction inverse_dunkl(Order alpha, const Spectrum& spectrum,
                                         std::vector<double> points, const QuadratureRule& rule) {
  rule.validate();
  if (spectrum.kind() != SpectrumKind::Dunkl) {
    throw DomainError("inverse_dunkl needs a Dunkl spectrum");
  }
  if (!(spectrum.order() == alpha)) throw DomainError("spectrum order does not match alpha");
  const double extent = spectrum.coverage();
  const specfun::DunklKernel kernel(alpha);
  const funcspace::WeightedMeasure mu(alpha);
  const double weight_power = 2.0 * alpha.value() + 1.0;
  const double c = mu.normalization();
  std::vector<Complex> values(points.size());
  parallel_for(points.size(), [&](std::size_t k) {
    const double x = points[k];
    values[k] = quadrature::integrate_finite(
        [&](double y) {
          const Complex e = kernel(x * y);
          return c * (spectrum(y) * e + spectrum(-y) * std::conj(e)) * std::pow(y, weight_power);
        },
        0.0, extent, rule.with_frequency_hint(x));
  });
  return funcspace::SampledFunction(std::move(points), std::move(values));
}

double max_abs_difference(const Spectrum& a, const Spectrum& b) {
  if (a.frequencies() != b.frequencies()) {
    throw DomainError("spectra are sampled on different frequency grids");
  }
  double worst = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    worst = std::max(worst, std::abs(a.values()[k] - b.values()[k]));
  }
  return worst;
}

}  // namespace dunkl::transforms
