#include <cmath>
#include <limits>

#include "doctest.h"
#include "faskl/specfun.hpp"
#include "oracles.hpp"

using faskl::bessel_j0;
using faskl::exp_integral_e1;
using faskl::exp_scaled_e1;

TEST_SUITE("specfun") {

TEST_CASE("j0 fixed values") {
  CHECK(bessel_j0(0.0) == 1.0);
  CHECK(bessel_j0(1.0) == doctest::Approx(0.7651976865579666).epsilon(1e-13));
  // first zero of J0, located by bisection on the series oracle below
  CHECK(std::abs(bessel_j0(2.404825557695773)) < 1e-10);
}

TEST_CASE("j0 first zero by bisection on the series oracle") {
  double lo = 2.0, hi = 3.0;
  for (int i = 0; i < 60; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (oracle::j0_series(lo) * oracle::j0_series(mid) <= 0.0)
      hi = mid;
    else
      lo = mid;
  }
  const double zero = 0.5 * (lo + hi);
  CHECK(zero == doctest::Approx(2.404825557695773).epsilon(1e-12));
  CHECK(std::abs(bessel_j0(zero)) < 1e-12);
}

TEST_CASE("j0 vs oracles on 1000 log-spaced points") {
  // series oracle below 14, integral-representation oracle above
  for (int i = 0; i < 1000; ++i) {
    const double x = 1e-3 * std::pow(50.0 / 1e-3, i / 999.0);
    const double ref = x <= 14.0 ? oracle::j0_series(x) : oracle::j0_integral(x);
    CHECK(std::abs(bessel_j0(x) - ref) <= 1e-12);
  }
}

TEST_CASE("j0 oracle cross-check in the overlap region") {
  for (double x = 8.0; x <= 14.0; x += 0.37)
    CHECK(oracle::j0_series(x) == doctest::Approx(oracle::j0_integral(x)).epsilon(1e-12));
}

TEST_CASE("j0 symmetry and bound") {
  for (double x : {0.3, 1.7, 7.9, 13.5, 29.0, 49.5}) {
    CHECK(bessel_j0(x) == bessel_j0(-x));
    CHECK(std::abs(bessel_j0(x)) <= 1.0);
  }
}

TEST_CASE("j0 rejects non-finite input") {
  CHECK_THROWS_AS(bessel_j0(std::numeric_limits<double>::infinity()), std::domain_error);
  CHECK_THROWS_AS(bessel_j0(std::numeric_limits<double>::quiet_NaN()), std::domain_error);
}

TEST_CASE("e1 fixed values") {
  CHECK(exp_integral_e1(1.0) == doctest::Approx(0.21938393439552026).epsilon(1e-12));
  CHECK(exp_integral_e1(10.0) == doctest::Approx(4.15696892968532e-6).epsilon(1e-10));
}

TEST_CASE("e1 vs integration oracle on 1000 log-spaced points") {
  for (int i = 0; i < 1000; ++i) {
    const double x = 1e-4 * std::pow(30.0 / 1e-4, i / 999.0);
    const double ref = oracle::e1_integral(x);
    CHECK(exp_integral_e1(x) == doctest::Approx(ref).epsilon(1e-10));
  }
}

TEST_CASE("e1 envelope and monotonicity") {
  double prev = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 200; ++i) {
    const double x = 1e-3 * std::pow(40.0 / 1e-3, i / 199.0);
    const double v = exp_integral_e1(x);
    CHECK(v < std::exp(-x) / x);
    CHECK(v > std::exp(-x) / (x + 1.0));
    CHECK(v < prev);
    prev = v;
  }
}

TEST_CASE("e1 domain") {
  CHECK_THROWS_AS(exp_integral_e1(0.0), std::domain_error);
  CHECK_THROWS_AS(exp_integral_e1(-2.0), std::domain_error);
}

TEST_CASE("scaled e1 consistent with plain e1") {
  for (double x : {0.2, 0.9, 1.5, 4.0, 20.0})
    CHECK(exp_scaled_e1(x) == doctest::Approx(std::exp(x) * exp_integral_e1(x)).epsilon(1e-12));
  // large argument: plain product would be inf * 0
  CHECK(exp_scaled_e1(800.0) == doctest::Approx(1.0 / 801.0).epsilon(1e-2));
}

}  // TEST_SUITE
