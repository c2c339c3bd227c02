#include <cmath>
#include <stdexcept>
#include <string>
#include <numbers>

#include "doctest.h"
#include "faskl/quadrature.hpp"

using faskl::gauss_hermite;
using faskl::QuadratureRule;
using faskl::tensor_grid_reduce;

namespace {

double rule_moment(const QuadratureRule& r, int power) {
  double s = 0.0;
  for (int j = 0; j < r.order; ++j) {
    double t = 1.0;
    for (int p = 0; p < power; ++p) t *= r.nodes[j];
    s += r.weights[j] * t;
  }
  return s;
}

// sqrt(pi) * (2m-1)!! / 2^m
double gaussian_even_moment(int m) {
  double v = std::sqrt(std::numbers::pi);
  for (int j = 1; j <= m; ++j) v *= (2.0 * j - 1.0) / 2.0;
  return v;
}

}  // namespace

TEST_SUITE("quadrature") {

TEST_CASE("order 1 and 2 closed forms") {
  const auto r1 = gauss_hermite(1);
  CHECK(r1.nodes[0] == 0.0);
  CHECK(r1.weights[0] == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-14));

  const auto r2 = gauss_hermite(2);
  CHECK(r2.nodes[0] == doctest::Approx(-1.0 / std::sqrt(2.0)).epsilon(1e-14));
  CHECK(r2.nodes[1] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
  CHECK(r2.weights[0] == doctest::Approx(0.5 * std::sqrt(std::numbers::pi)).epsilon(1e-14));
  CHECK(r2.weights[1] == r2.weights[0]);
}

TEST_CASE("rule invariants across orders") {
  for (int q : {1, 2, 3, 5, 10, 17, 32, 64}) {
    const auto r = gauss_hermite(q);
    double wsum = 0.0;
    for (int j = 0; j < q; ++j) {
      CHECK(r.weights[j] > 0.0);
      CHECK(r.nodes[j] == -r.nodes[q - 1 - j]);  // exact after symmetrization
      CHECK(r.weights[j] == r.weights[q - 1 - j]);
      if (j > 0) CHECK(r.nodes[j] > r.nodes[j - 1]);
      wsum += r.weights[j];
    }
    CHECK(wsum == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-12));
  }
}

TEST_CASE("moment exactness up to degree 2Q-1") {
  for (int q : {2, 5, 10, 32, 64}) {
    const auto r = gauss_hermite(q);
    for (int m = 0; 2 * m <= 2 * q - 2; ++m) {
      const double want = gaussian_even_moment(m);
      CHECK(rule_moment(r, 2 * m) == doctest::Approx(want).epsilon(1e-12));
    }
    for (int m = 0; 2 * m + 1 <= 2 * q - 1; ++m) {
      double scale = 0.0;
      for (int j = 0; j < q; ++j)
        scale += r.weights[j] * std::pow(std::abs(r.nodes[j]), 2 * m + 1);
      CHECK(std::abs(rule_moment(r, 2 * m + 1)) <= 1e-12 * std::max(1.0, scale));
    }
  }
}

TEST_CASE("q=10 quartic moment") {
  const auto r = gauss_hermite(10);
  CHECK(rule_moment(r, 4) ==
        doctest::Approx(0.75 * std::sqrt(std::numbers::pi)).epsilon(1e-12));
}

TEST_CASE("order validation") {
  CHECK_THROWS_AS(gauss_hermite(0), std::invalid_argument);
  CHECK_THROWS_AS(gauss_hermite(65), std::invalid_argument);
}

TEST_CASE("tensor constants") {
  const auto r = gauss_hermite(7);
  const auto one = [](std::span<const double>) { return 1.0; };
  CHECK(tensor_grid_reduce(r, 1, one) ==
        doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-13));
  CHECK(tensor_grid_reduce(r, 2, one) == doctest::Approx(std::numbers::pi).epsilon(1e-13));
}

TEST_CASE("tensor product factorization") {
  const auto r = gauss_hermite(12);
  const auto f = [](double t) { return t * t + 0.5; };
  const auto g = [](double t) { return std::cos(t); };
  const double fg = tensor_grid_reduce(
      r, 2, [&](std::span<const double> t) { return f(t[0]) * g(t[1]); });
  const double f1 = tensor_grid_reduce(r, 1, [&](std::span<const double> t) { return f(t[0]); });
  const double g1 = tensor_grid_reduce(r, 1, [&](std::span<const double> t) { return g(t[0]); });
  CHECK(fg == doctest::Approx(f1 * g1).epsilon(1e-10));
}

TEST_CASE("disk indicator converges slowly") {
  // Exact Gaussian disk mass: int over t1^2+t2^2 <= 1 of e^{-t^2} = pi(1-1/e).
  // Tensor GH on a discontinuous indicator is first-order at best; the
  // Q = 10 error is ~0.49, shrinking to ~0.05 around Q = 24.
  const double exact = std::numbers::pi * (1.0 - std::exp(-1.0));
  const auto disk = [](std::span<const double> t) {
    return t[0] * t[0] + t[1] * t[1] <= 1.0 ? 1.0 : 0.0;
  };
  const double q10 = tensor_grid_reduce(gauss_hermite(10), 2, disk);
  CHECK(std::abs(q10 - exact) < 0.6);
  const double q24 = tensor_grid_reduce(gauss_hermite(24), 2, disk);
  CHECK(std::abs(q24 - exact) < std::abs(q10 - exact));
  CHECK(std::abs(q24 - exact) < 0.08);
}

TEST_CASE("dimension refusal carries the cost estimate") {
  const auto r = gauss_hermite(10);
  try {
    tensor_grid_reduce(r, 9, [](std::span<const double>) { return 1.0; });
    FAIL("expected refusal");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("10^9") != std::string::npos);
  }
}

}  // TEST_SUITE
