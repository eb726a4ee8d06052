#include <doctest.h>

#include <cmath>

#include "dunkl/battery.hpp"
#include "dunkl/errors.hpp"
#include "dunkl/transforms.hpp"
#include "oracles.hpp"

using namespace dunkl;
using namespace dunkl::transforms;
using specfun::Order;

TEST_SUITE("transforms") {
  TEST_CASE("frequency grids") {
    const auto g = frequency_grid(129, 8.0);
    CHECK(g.front() == -8.0);
    CHECK(g.back() == 8.0);
    CHECK(g[64] == 0.0);
    CHECK_FALSE(std::signbit(g[64]));
    for (std::size_t i = 0; i < g.size(); ++i) CHECK(g[i] == -g[g.size() - 1 - i]);
    const auto h = positive_frequency_grid(129, 8.0);
    CHECK(h.size() == 65);
    CHECK(h.front() == 0.0);
  }

  TEST_CASE("gaussian is a fixed point of the Hankel transform") {
    const QuadratureRule rule;
    const auto y = positive_frequency_grid(81, 4.0);
    for (double beta : {-0.5, 0.0, 0.5, 2.0}) {
      const Spectrum s = hankel_transform(
          Order(beta), [](double x) { return Complex(std::exp(-x * x / 2)); }, y, rule);
      for (std::size_t k = 0; k < y.size(); ++k) {
        CHECK(std::abs(s.values()[k] - std::exp(-y[k] * y[k] / 2)) < 1e-12);
      }
    }
  }

  TEST_CASE("order -1/2 is the unitary Fourier transform") {
    const QuadratureRule rule;
    const auto y = frequency_grid(17, 6.0);
    for (const auto& tf : battery::core()) {
      const Spectrum s = dunkl_transform(Order(-0.5), tf.f, y, rule);
      for (std::size_t k = 0; k < y.size(); ++k) {
        CHECK(std::abs(s.values()[k] - oracle::fourier(tf.f, y[k])) < 1e-10);
      }
    }
  }

  TEST_CASE("direct and Hankel routes agree") {
    const QuadratureRule rule;
    const auto y = frequency_grid(33, 8.0);
    for (const auto& tf : battery::core()) {
      const Spectrum a = dunkl_transform(Order(0.7), tf.f, y, rule);
      const Spectrum b = dunkl_via_hankel(Order(0.7), tf.f, y, rule);
      CHECK(max_abs_difference(a, b) < 1e-12);
    }
  }

  TEST_CASE("sampled input approximates the analytic transform") {
    const QuadratureRule rule;
    const auto y = frequency_grid(33, 6.0);
    const auto& tf = battery::find("shifted_gaussian");
    const auto f = funcspace::SampledFunction::sample(tf.f, 512, 12.0);
    CHECK(max_abs_difference(dunkl_transform(Order(0.5), f, y, rule),
                             dunkl_transform(Order(0.5), tf.f, y, rule)) < 1e-6);
    CHECK(max_abs_difference(dunkl_via_hankel(Order(0.5), f, y, rule),
                             dunkl_transform(Order(0.5), tf.f, y, rule)) < 1e-6);
  }

  TEST_CASE("inverse transform recovers the input") {
    const QuadratureRule rule;
    const auto& tf = battery::find("shifted_gaussian");
    const Spectrum s = dunkl_transform(Order(1.3), tf.f, frequency_grid(1025, 16.0), rule);
    const auto back = inverse_dunkl(Order(1.3), s, funcspace::SampledFunction::offset_grid(32, 3.0), rule);
    for (std::size_t i = 0; i < back.size(); ++i) {
      CHECK(std::abs(back.values()[i] - tf.f(back.grid()[i])) < 1e-6);
    }
  }

  TEST_CASE("zero input gives a zero spectrum") {
    const Spectrum s = dunkl_transform(Order(0.0), battery::find("zero").f, frequency_grid(9, 2.0),
                                       QuadratureRule{});
    for (const Complex& v : s.values()) CHECK(v == Complex(0.0));
    CHECK(s.tail().relative_to_peak == 0.0);
    CHECK_FALSE(s.tail().warning);
  }

  TEST_CASE("slow decay raises the tail warning") {
    const Spectrum s = dunkl_transform(
        Order(0.0), [](double x) { return Complex(1.0 / (1.0 + x * x * x * x)); },
        frequency_grid(9, 2.0), QuadratureRule{});
    CHECK(s.tail().warning);
  }

  TEST_CASE("spectrum validation and interpolation") {
    CHECK_THROWS_AS(Spectrum({0.0, 0.0}, {1.0, 1.0}, Order(0.0), SpectrumKind::Dunkl), DomainError);
    CHECK_THROWS_AS(Spectrum({-1.0, 1.0}, {1.0, 1.0}, Order(0.0), SpectrumKind::Hankel), DomainError);
    std::vector<double> y = positive_frequency_grid(41, 4.0);
    std::vector<Complex> v;
    for (double t : y) v.emplace_back(std::exp(-t * t / 2));
    const Spectrum s(y, v, Order(0.0), SpectrumKind::Hankel);
    CHECK(s.coverage() == 4.0);
    CHECK(std::abs(s(-1.234) - std::exp(-1.234 * 1.234 / 2)) < 1e-6);
  }
}
