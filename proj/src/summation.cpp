#include "dunkl/summation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dunkl/errors.hpp"

namespace dunkl::summation {

namespace {

constexpr double kCoverageSlack = 1e-12;

void require_spectrum(const Spectrum& spectrum, Order order, transforms::SpectrumKind kind,
                      double R) {
  if (spectrum.kind() != kind) throw DomainError("spectrum has the wrong kind for this sum");
  if (!(spectrum.order() == order)) throw DomainError("spectrum order does not match the sum");
  if (!(R > 0.0) || !std::isfinite(R)) throw DomainError("partial-sum radius must be positive");
  if (R > spectrum.coverage() * (1.0 + kCoverageSlack)) {
    throw DomainError("radius " + std::to_string(R) + " exceeds spectrum coverage " +
                      std::to_string(spectrum.coverage()));
  }
}

// Integrand of s_R^beta at x >= 0.
auto hankel_integrand(const Spectrum& spectrum, const specfun::NormalizedBessel& kernel,
                      double x) {
  const double weight_power = 2.0 * kernel.order().value() + 1.0;
  return [&spectrum, &kernel, x, weight_power](double y) {
    return spectrum(y) * (kernel(x * y) * std::pow(y, weight_power));
  };
}

// Integrand of S_R^alpha folded onto y >= 0.
auto dunkl_integrand(const Spectrum& spectrum, const specfun::DunklKernel& kernel, double c,
                     double x) {
  const double weight_power = 2.0 * kernel.order().value() + 1.0;
  return [&spectrum, &kernel, c, x, weight_power](double y) {
    const Complex e = kernel(x * y);
    return c * (spectrum(y) * e + spectrum(-y) * std::conj(e)) * std::pow(y, weight_power);
  };
}

template <class F>
std::vector<Complex> accumulate(F&& f, const RadiusGrid& radii, const QuadratureRule& rule) {
  std::vector<Complex> sums;
  sums.reserve(radii.size());
  Complex running = 0.0;
  double lower = 0.0;
  for (double R : radii.radii()) {
    running += quadrature::integrate_finite(f, lower, R, rule);
    sums.push_back(running);
    lower = R;
  }
  return sums;
}

double max_abs(const std::vector<Complex>& values) {
  double best = 0.0;
  for (const Complex& v : values) best = std::max(best, std::abs(v));
  return best;
}

}  // namespace

RadiusGrid::RadiusGrid(std::vector<double> radii) : radii_(std::move(radii)) {
  if (radii_.empty()) throw DomainError("radius grid must not be empty");
  for (std::size_t i = 0; i < radii_.size(); ++i) {
    if (!(radii_[i] > 0.0) || !std::isfinite(radii_[i])) {
      throw DomainError("radii must be positive and finite");
    }
    if (i > 0 && !(radii_[i] > radii_[i - 1])) {
      throw DomainError("radii must be strictly increasing");
    }
  }
}

RadiusGrid RadiusGrid::merged(double r_min, double r_max, std::size_t log_count,
                              std::size_t linear_count) {
  if (!(r_min > 0.0) || !(r_max > r_min)) throw DomainError("radius grid needs 0 < r_min < r_max");
  if (log_count < 2 || linear_count < 2) throw DomainError("radius grid needs >= 2 points each");
  std::vector<double> radii;
  const double ratio = std::log(r_max / r_min);
  for (std::size_t i = 0; i < log_count; ++i) {
    const double s = static_cast<double>(i) / static_cast<double>(log_count - 1);
    radii.push_back(i + 1 == log_count ? r_max : r_min * std::exp(ratio * s));
  }
  for (std::size_t i = 0; i < linear_count; ++i) {
    const double s = static_cast<double>(i) / static_cast<double>(linear_count - 1);
    radii.push_back(i + 1 == linear_count ? r_max : r_min + (r_max - r_min) * s);
  }
  std::sort(radii.begin(), radii.end());
  // Drop near-duplicates so every accumulated segment has positive length.
  std::vector<double> unique;
  for (double r : radii) {
    if (unique.empty() || r > unique.back() * (1.0 + 1e-12)) unique.push_back(r);
  }
  return RadiusGrid(std::move(unique));
}

RadiusGrid RadiusGrid::prefix(std::size_t count) const {
  if (count == 0 || count > radii_.size()) throw DomainError("radius grid prefix out of range");
  return RadiusGrid({radii_.begin(), radii_.begin() + static_cast<long>(count)});
}

Complex hankel_partial_sum(Order beta, const Spectrum& spectrum, double R, double x,
                           const QuadratureRule& rule) {
  require_spectrum(spectrum, beta, transforms::SpectrumKind::Hankel, R);
  if (!(x >= 0.0)) throw DomainError("Hankel partial sums are evaluated at x >= 0");
  const specfun::NormalizedBessel kernel(beta);
  return quadrature::integrate_finite(hankel_integrand(spectrum, kernel, x), 0.0, R,
                                      rule.with_frequency_hint(x));
}

Complex dunkl_partial_sum(Order alpha, const Spectrum& spectrum, double R, double x,
                          const QuadratureRule& rule) {
  require_spectrum(spectrum, alpha, transforms::SpectrumKind::Dunkl, R);
  const specfun::DunklKernel kernel(alpha);
  const double c = funcspace::WeightedMeasure(alpha).normalization();
  return quadrature::integrate_finite(dunkl_integrand(spectrum, kernel, c, x), 0.0, R,
                                      rule.with_frequency_hint(x));
}

Complex decomposed_partial_sum(Order alpha, const HankelPair& parts, double R, double x,
                               const QuadratureRule& rule) {
  const double r = std::abs(x);
  return hankel_partial_sum(alpha, parts.even, R, r, rule) +
         x * hankel_partial_sum(alpha.next(), parts.odd, R, r, rule);
}

Complex decomposed_partial_sum(Order alpha, const transforms::Signal& f, double R, double x,
                               const QuadratureRule& rule) {
  constexpr std::size_t kDefaultFrequencies = 1024;
  const std::vector<double> freqs = transforms::positive_frequency_grid(kDefaultFrequencies, R);
  return decomposed_partial_sum(alpha, transforms::hankel_components(alpha, f, freqs, rule), R, x,
                                rule);
}

std::vector<Complex> hankel_partial_sums(Order beta, const Spectrum& spectrum,
                                         const RadiusGrid& radii, double x,
                                         const QuadratureRule& rule) {
  require_spectrum(spectrum, beta, transforms::SpectrumKind::Hankel, radii.max());
  if (!(x >= 0.0)) throw DomainError("Hankel partial sums are evaluated at x >= 0");
  const specfun::NormalizedBessel kernel(beta);
  return accumulate(hankel_integrand(spectrum, kernel, x), radii, rule.with_frequency_hint(x));
}

std::vector<Complex> dunkl_partial_sums(Order alpha, const Spectrum& spectrum,
                                        const RadiusGrid& radii, double x,
                                        const QuadratureRule& rule) {
  require_spectrum(spectrum, alpha, transforms::SpectrumKind::Dunkl, radii.max());
  const specfun::DunklKernel kernel(alpha);
  const double c = funcspace::WeightedMeasure(alpha).normalization();
  return accumulate(dunkl_integrand(spectrum, kernel, c, x), radii, rule.with_frequency_hint(x));
}

double maximal_operator(Order alpha, const Spectrum& spectrum, double x, const RadiusGrid& radii,
                        const QuadratureRule& rule) {
  return max_abs(dunkl_partial_sums(alpha, spectrum, radii, x, rule));
}

double hankel_maximal_operator(Order beta, const Spectrum& spectrum, double x,
                               const RadiusGrid& radii, const QuadratureRule& rule) {
  return max_abs(hankel_partial_sums(beta, spectrum, radii, x, rule));
}

MaximalBound decomposed_maximal_bound(Order alpha, const HankelPair& parts, double x,
                                      const RadiusGrid& radii, const QuadratureRule& rule) {
  const double r = std::abs(x);
  return {hankel_maximal_operator(alpha, parts.even, r, radii, rule),
          r * hankel_maximal_operator(alpha.next(), parts.odd, r, radii, rule)};
}

}  // namespace dunkl::summation
