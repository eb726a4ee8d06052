#include "dunkl/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "dunkl/errors.hpp"

namespace dunkl::specfun {

namespace {

constexpr double kRegimeSwitch = 12.0;
constexpr int kSeriesTermCap = 60;
constexpr double kSeriesRelativeCutoff = 1e-17;
constexpr int kHankelTermsPerSeries = 8;
constexpr double kMaxDirectAsymptoticOrder = 3.0;

// Lanczos coefficients for g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993227684700473478,  676.520368121885098567009190444019,
    -1259.13921672240287047156078755283, 771.3234287776530788486528258894,
    -176.61502916214059906584551354,     12.507343278686904814458936853,
    -0.13857109526572011689554707,       9.984369578019570859563e-6,
    1.50563273514931155834e-7};

double series_switch(double nu) { return std::max(kRegimeSwitch, nu); }

double series_leading(double nu) { return 1.0 / (std::exp2(nu) * gamma(nu + 1.0)); }

}  // namespace

Order::Order(double value) : value_(value) {
  if (!std::isfinite(value) || value < kMinimum) {
    throw DomainError("order must be a finite real >= -1/2, got " + std::to_string(value));
  }
}

double gamma(double x) {
  if (!(x > 0.0) || std::isinf(x)) {
    throw DomainError("gamma requires a finite x > 0, got " + std::to_string(x));
  }
  if (x < 1.0) return gamma(x + 1.0) / x;

  const double z = x - 1.0;
  double sum = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) {
    sum += kLanczos[i] / (z + static_cast<double>(i));
  }
  const double t = z + kLanczosG + 0.5;
  // Split the power so that t^(z+1/2) does not overflow before the product does.
  const double half_power = std::pow(t, 0.5 * (z + 0.5));
  return std::sqrt(2.0 * std::numbers::pi) * half_power * (half_power * std::exp(-t)) * sum;
}

namespace detail {

double normalized_bessel_series(double nu, double x, double leading) {
  const double q = -0.25 * x * x;
  const int cap = kSeriesTermCap + static_cast<int>(x);
  double term = leading;
  double sum = leading;
  for (int k = 1; k < cap; ++k) {
    term *= q / (k * (nu + k));
    sum += term;
    if (std::abs(term) < kSeriesRelativeCutoff * std::abs(sum)) break;
  }
  return sum;
}

double bessel_j_hankel_asymptotic(double nu, double x) {
  const double mu = 4.0 * nu * nu;
  // a_k / x^k for k = 0 .. 2K - 1, a_k = prod_{j<=k} (mu - (2j-1)^2) / (k! 8^k).
  std::array<double, 2 * kHankelTermsPerSeries> scaled{};
  scaled[0] = 1.0;
  for (int k = 1; k < 2 * kHankelTermsPerSeries; ++k) {
    const double odd = 2.0 * k - 1.0;
    scaled[k] = scaled[k - 1] * (mu - odd * odd) / (8.0 * k * x);
  }
  double p = 0.0;
  double q = 0.0;
  double sign = 1.0;
  for (int k = 0; k < kHankelTermsPerSeries; ++k) {
    p += sign * scaled[2 * k];
    q += sign * scaled[2 * k + 1];
    sign = -sign;
  }
  const double omega = x - (0.5 * nu + 0.25) * std::numbers::pi;
  return std::sqrt(2.0 / (std::numbers::pi * x)) * (p * std::cos(omega) - q * std::sin(omega));
}

double bessel_j_recurrence(double nu, double x) {
  const double steps = std::floor(nu + 0.5);
  const double base = nu - steps;  // in [-1/2, 1/2)
  double previous = bessel_j_hankel_asymptotic(base, x);
  double current = bessel_j_hankel_asymptotic(base + 1.0, x);
  for (int m = 1; m < static_cast<int>(steps); ++m) {
    const double next = 2.0 * (base + m) / x * current - previous;
    previous = current;
    current = next;
  }
  return steps == 0.0 ? previous : current;
}

}  // namespace detail

namespace {

double bessel_j_large(double nu, double x) {
  return nu <= kMaxDirectAsymptoticOrder ? detail::bessel_j_hankel_asymptotic(nu, x)
                                         : detail::bessel_j_recurrence(nu, x);
}

}  // namespace

double bessel_j(Order nu, double x) {
  if (!(x >= 0.0)) throw DomainError("bessel_j requires x >= 0, got " + std::to_string(x));
  const double v = nu.value();
  if (x < series_switch(v)) {
    return std::pow(x, v) * detail::normalized_bessel_series(v, x, series_leading(v));
  }
  return bessel_j_large(v, x);
}

double normalized_bessel(Order nu, double x) { return NormalizedBessel(nu)(x); }

std::complex<double> dunkl_kernel(Order alpha, double t) { return DunklKernel(alpha)(t); }

NormalizedBessel::NormalizedBessel(Order nu)
    : nu_(nu), series_leading_(series_leading(nu.value())) {}

double NormalizedBessel::operator()(double x) const {
  if (!(x >= 0.0)) {
    throw DomainError("normalized_bessel requires x >= 0, got " + std::to_string(x));
  }
  const double v = nu_.value();
  if (x < series_switch(v)) return detail::normalized_bessel_series(v, x, series_leading_);
  return bessel_j_large(v, x) / std::pow(x, v);
}

DunklKernel::DunklKernel(Order alpha)
    : alpha_(alpha),
      prefactor_(std::exp2(alpha.value()) * gamma(alpha.value() + 1.0)),
      even_(alpha),
      odd_(alpha.next()) {}

std::complex<double> DunklKernel::operator()(double t) const {
  const double r = std::abs(t);
  return {prefactor_ * even_(r), prefactor_ * t * odd_(r)};
}

}  // namespace dunkl::specfun
