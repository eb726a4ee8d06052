#ifndef DUNKL_INTERPOLATION_HPP
#define DUNKL_INTERPOLATION_HPP

#include <complex>
#include <span>

namespace dunkl::interpolation {

/// How samples on a half-line continue to negative abscissae.
enum class Parity { None, Even, Odd };

inline constexpr int kStencilPoints = 8;

/// Local Lagrange interpolation through the kStencilPoints nodes nearest x.
///
/// With parity Even or Odd the node set is extended by reflection through 0
/// (a node exactly at 0 is not duplicated), which keeps the stencil centred
/// near the origin. Stencils are clamped at the ends of the node set, so
/// points outside it are extrapolated; callers decide the extension policy.
std::complex<double> lagrange(std::span<const double> nodes,
                              std::span<const std::complex<double>> values, double x,
                              Parity parity = Parity::None);

}  // namespace dunkl::interpolation

#endif  // DUNKL_INTERPOLATION_HPP
