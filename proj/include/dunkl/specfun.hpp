#ifndef DUNKL_SPECFUN_HPP
#define DUNKL_SPECFUN_HPP

#include <complex>

namespace dunkl::specfun {

/// Real Bessel/Dunkl order, always >= -1/2.
class Order {
 public:
  static constexpr double kMinimum = -0.5;

  explicit Order(double value);

  double value() const noexcept { return value_; }
  /// The order shifted by one (alpha -> alpha + 1).
  Order next() const { return Order(value_ + 1.0); }

  friend bool operator==(Order, Order) = default;

 private:
  double value_;
};

/// Gamma function for x > 0 (Lanczos, g = 7, nine coefficients).
double gamma(double x);

/// J_nu(x) for x >= 0.
///
/// Three regimes: the ascending power series when x < max(12, nu), the
/// Hankel large-argument expansion (eight terms in each of P and Q) when
/// nu <= 3, and otherwise forward recurrence from an order in [-1/2, 1/2)
/// whose two seeds come from the Hankel expansion. Forward recurrence is
/// stable there because x >= nu.
double bessel_j(Order nu, double x);

/// J_nu(x) / x^nu, with the value 1 / (2^nu Gamma(nu + 1)) at x = 0.
double normalized_bessel(Order nu, double x);

/// E_alpha(i t) = 2^a Gamma(a+1) [ j_a(|t|) + i t j_{a+1}(|t|) ], j the normalized Bessel.
std::complex<double> dunkl_kernel(Order alpha, double t);

/// Evaluators that cache the order-dependent constants. Use these in hot loops.
class NormalizedBessel {
 public:
  explicit NormalizedBessel(Order nu);

  double operator()(double x) const;
  Order order() const noexcept { return nu_; }

 private:
  Order nu_;
  double series_leading_;  // 1 / (2^nu Gamma(nu + 1))
};

class DunklKernel {
 public:
  explicit DunklKernel(Order alpha);

  std::complex<double> operator()(double t) const;
  Order order() const noexcept { return alpha_; }

 private:
  Order alpha_;
  double prefactor_;  // 2^alpha Gamma(alpha + 1)
  NormalizedBessel even_;
  NormalizedBessel odd_;
};

namespace detail {

// The individual regimes, exposed so tests can compare them on an overlap window.
double normalized_bessel_series(double nu, double x, double leading);
double bessel_j_hankel_asymptotic(double nu, double x);
double bessel_j_recurrence(double nu, double x);

}  // namespace detail

}  // namespace dunkl::specfun

#endif  // DUNKL_SPECFUN_HPP
