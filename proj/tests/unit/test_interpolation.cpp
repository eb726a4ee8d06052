#include <doctest.h>

#include <cmath>
#include <vector>

#include "dunkl/interpolation.hpp"

using namespace dunkl;
using interpolation::Parity;

TEST_SUITE("interpolation") {
  TEST_CASE("degree seven polynomials are reproduced") {
    std::vector<double> nodes;
    std::vector<std::complex<double>> values;
    const auto p = [](double x) { return 1.0 - 2.0 * x + 0.5 * std::pow(x, 4) - 0.01 * std::pow(x, 7); };
    for (int i = 0; i < 20; ++i) {
      nodes.push_back(-3.0 + 0.3 * i);
      values.emplace_back(p(nodes.back()));
    }
    for (double x : {-3.0, -2.95, 0.01, 1.234, 2.7}) {
      CHECK(std::abs(interpolation::lagrange(nodes, values, x) - p(x)) < 1e-11);
    }
  }

  TEST_CASE("parity continuation near the origin") {
    std::vector<double> nodes;
    std::vector<std::complex<double>> even;
    std::vector<std::complex<double>> odd;
    for (int i = 0; i < 12; ++i) {
      nodes.push_back(0.1 + 0.2 * i);
      even.emplace_back(std::cos(nodes.back()));
      odd.emplace_back(std::sin(nodes.back()));
    }
    CHECK(std::abs(interpolation::lagrange(nodes, even, 0.0, Parity::Even) - 1.0) < 1e-8);
    CHECK(std::abs(interpolation::lagrange(nodes, odd, 0.0, Parity::Odd)) < 1e-12);
    CHECK(std::abs(interpolation::lagrange(nodes, odd, 0.05, Parity::Odd) - std::sin(0.05)) < 1e-9);
  }

  TEST_CASE("nodes are reproduced exactly") {
    const std::vector<double> nodes{0.0, 1.0, 2.0};
    const std::vector<std::complex<double>> values{3.0, -1.0, 4.0};
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      CHECK(interpolation::lagrange(nodes, values, nodes[i]) == values[i]);
    }
  }
}
