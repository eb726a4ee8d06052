#ifndef DUNKL_SUMMATION_HPP
#define DUNKL_SUMMATION_HPP

#include <complex>
#include <cstddef>
#include <vector>

#include "dunkl/transforms.hpp"

namespace dunkl::summation {

using Complex = std::complex<double>;
using quadrature::QuadratureRule;
using specfun::Order;
using transforms::HankelPair;
using transforms::Spectrum;

/// Radii standing in for sup over R > 0.
class RadiusGrid {
 public:
  explicit RadiusGrid(std::vector<double> radii);

  /// Union of log_count log-spaced and linear_count linearly spaced radii in [r_min, r_max].
  static RadiusGrid merged(double r_min = 0.25, double r_max = 64.0, std::size_t log_count = 64,
                           std::size_t linear_count = 64);

  const std::vector<double>& radii() const noexcept { return radii_; }
  std::size_t size() const noexcept { return radii_.size(); }
  double max() const { return radii_.back(); }
  RadiusGrid prefix(std::size_t count) const;

 private:
  std::vector<double> radii_;
};

/// s_R^beta g(x) = int_0^R H_beta g(y) j_beta(xy) y^(2 beta + 1) dy; x >= 0.
Complex hankel_partial_sum(Order beta, const Spectrum& spectrum, double R, double x,
                           const QuadratureRule& rule);

/// S_R^alpha f(x) = c_alpha int_{|y| <= R} D_alpha f(y) E_alpha(ixy) |y|^(2 alpha + 1) dy.
Complex dunkl_partial_sum(Order alpha, const Spectrum& spectrum, double R, double x,
                          const QuadratureRule& rule);

/// s_R^alpha(f_e)(|x|) + x s_R^{alpha+1}(f_o / r)(|x|).
Complex decomposed_partial_sum(Order alpha, const HankelPair& parts, double R, double x,
                               const QuadratureRule& rule);

/// Convenience form computing the Hankel pair on a default grid covering R.
Complex decomposed_partial_sum(Order alpha, const transforms::Signal& f, double R, double x,
                               const QuadratureRule& rule);

/// Partial sums at every radius of the grid, accumulated segment by segment
/// over [0, r_1], [r_1, r_2], ... in ascending order.
std::vector<Complex> hankel_partial_sums(Order beta, const Spectrum& spectrum,
                                         const RadiusGrid& radii, double x,
                                         const QuadratureRule& rule);
std::vector<Complex> dunkl_partial_sums(Order alpha, const Spectrum& spectrum,
                                        const RadiusGrid& radii, double x,
                                        const QuadratureRule& rule);

/// max over the grid of |S_R^alpha f(x)|: a lower estimate of S_*^alpha f(x).
double maximal_operator(Order alpha, const Spectrum& spectrum, double x, const RadiusGrid& radii,
                        const QuadratureRule& rule);
/// max over the grid of |s_R^beta g(x)|.
double hankel_maximal_operator(Order beta, const Spectrum& spectrum, double x,
                               const RadiusGrid& radii, const QuadratureRule& rule);

/// The two maximal terms bounding S_*^alpha f(x).
struct MaximalBound {
  double even_term;  // s_*^alpha(f_e)(|x|)
  double odd_term;   // |x| s_*^{alpha+1}(f_o / r)(|x|)
  double total() const { return even_term + odd_term; }
};

MaximalBound decomposed_maximal_bound(Order alpha, const HankelPair& parts, double x,
                                      const RadiusGrid& radii, const QuadratureRule& rule);

}  // namespace dunkl::summation

#endif  // DUNKL_SUMMATION_HPP
