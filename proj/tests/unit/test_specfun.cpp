#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "dunkl/errors.hpp"
#include "dunkl/specfun.hpp"
#include "oracles.hpp"

using namespace dunkl;
using specfun::Order;

TEST_SUITE("specfun") {
  TEST_CASE("order rejects values below -1/2") {
    CHECK_NOTHROW(Order(-0.5));
    CHECK_THROWS_AS(Order(-0.6), DomainError);
    CHECK_THROWS_AS(Order(std::numeric_limits<double>::quiet_NaN()), DomainError);
    CHECK(Order(0.25).next().value() == doctest::Approx(1.25));
  }

  TEST_CASE("gamma matches the boost oracle") {
    for (double x = 0.05; x < 30.0; x += 0.173) {
      const double expected = oracle::gamma(x);
      CHECK(std::abs(specfun::gamma(x) - expected) <= 1e-13 * std::abs(expected));
    }
    CHECK(specfun::gamma(0.5) == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-15));
  }

  TEST_CASE("bessel J matches the multiprecision series") {
    for (double nu : {-0.5, 0.0, 0.5, 1.0, 2.7, 5.0, 9.5}) {
      for (double x = 0.25; x <= 80.0; x += 0.731) {
        INFO("nu = " << nu << ", x = " << x);
        CHECK(std::abs(specfun::bessel_j(Order(nu), x) - oracle::bessel_j(nu, x)) < 1e-10);
      }
    }
  }

  TEST_CASE("bessel J is continuous across regime switches") {
    for (double nu : {0.0, 3.0, 3.5, 14.0}) {
      for (double x : {11.999, 12.0, 12.001, nu - 1e-3, nu + 1e-3}) {
        if (x <= 0.0) continue;
        CHECK(std::abs(specfun::bessel_j(Order(nu), x) - oracle::bessel_j(nu, x)) < 1e-10);
      }
    }
  }

  TEST_CASE("normalized bessel at the origin") {
    for (double nu : {-0.5, 0.0, 1.3}) {
      const double expected = 1.0 / (std::pow(2.0, nu) * oracle::gamma(nu + 1.0));
      CHECK(specfun::normalized_bessel(Order(nu), 0.0) == doctest::Approx(expected).epsilon(1e-14));
      CHECK(specfun::NormalizedBessel(Order(nu))(1e-9) == doctest::Approx(expected).epsilon(1e-12));
    }
  }

  TEST_CASE("dunkl kernel reduces to the exponential") {
    const specfun::DunklKernel e(Order(-0.5));
    for (double t = -50.0; t <= 50.0; t += 0.37) {
      CHECK(std::abs(e(t) - std::exp(std::complex<double>(0.0, t))) < 1e-10);
    }
  }

  TEST_CASE("dunkl kernel is one at the origin and bounded by one") {
    for (double a : {-0.5, 0.0, 0.5, 1.3, 4.0}) {
      const specfun::DunklKernel e{Order(a)};
      CHECK(std::abs(e(0.0) - 1.0) < 1e-14);
      for (double t = -40.0; t <= 40.0; t += 0.113) CHECK(std::abs(e(t)) <= 1.0 + 1e-10);
    }
  }

  TEST_CASE("dunkl kernel conjugate symmetry") {
    const specfun::DunklKernel e(Order(0.7));
    for (double t : {0.3, 2.0, 17.5}) CHECK(std::abs(e(-t) - std::conj(e(t))) < 1e-15);
  }
}
