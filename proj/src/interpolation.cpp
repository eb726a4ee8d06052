#include "dunkl/interpolation.hpp"

#include <algorithm>
#include <array>

namespace dunkl::interpolation {

std::complex<double> lagrange(std::span<const double> nodes,
                              std::span<const std::complex<double>> values, double x,
                              Parity parity) {
  const auto n = static_cast<long>(nodes.size());
  if (n == 0) return 0.0;

  // Extended index j in [low, n): j >= 0 is a stored node, j < 0 its reflection.
  const long skip_zero = (parity != Parity::None && nodes[0] == 0.0) ? 1 : 0;
  const long low = parity == Parity::None ? 0 : -(n - skip_zero);
  const double sign = parity == Parity::Odd ? -1.0 : 1.0;
  auto node_at = [&](long j) { return j >= 0 ? nodes[j] : -nodes[-j - 1 + skip_zero]; };
  auto value_at = [&](long j) {
    return j >= 0 ? values[j] : sign * values[-j - 1 + skip_zero];
  };

  long upper;
  if (x >= 0.0 || parity == Parity::None) {
    upper = static_cast<long>(std::upper_bound(nodes.begin(), nodes.end(), x) - nodes.begin());
  } else {
    // Count reflected nodes above x: those with stored value < -x.
    const long below = static_cast<long>(
        std::lower_bound(nodes.begin() + skip_zero, nodes.end(), -x) - nodes.begin());
    upper = -(below - skip_zero);
  }

  const long count = std::min<long>(kStencilPoints, n - low);
  long start = upper - count / 2;
  start = std::clamp(start, low, n - count);

  std::array<double, kStencilPoints> xs{};
  std::array<std::complex<double>, kStencilPoints> ys{};
  for (long k = 0; k < count; ++k) {
    xs[k] = node_at(start + k);
    ys[k] = value_at(start + k);
  }
  for (long k = 0; k < count; ++k) {
    if (x == xs[k]) return ys[k];
  }
  std::complex<double> result = 0.0;
  for (long k = 0; k < count; ++k) {
    double basis = 1.0;
    for (long m = 0; m < count; ++m) {
      if (m != k) basis *= (x - xs[m]) / (xs[k] - xs[m]);
    }
    result += basis * ys[k];
  }
  return result;
}

}  // namespace dunkl::interpolation
