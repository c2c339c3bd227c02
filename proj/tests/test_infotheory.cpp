#include <cmath>
#include <stdexcept>
#include <string>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "faskl/baselines.hpp"
#include "faskl/errors.hpp"
#include "faskl/infotheory.hpp"

using namespace faskl;

namespace {

EigenSystem identity_system(int n) {
  std::vector<double> row(n, 0.0);
  row[0] = 1.0;
  return eigendecompose(CorrelationMatrix::from_first_row(row));
}

// Smallest achievable rate with distortion <= d on the water-filling
// staircase: minimize over feasible flooded sets, taking theta to the lower
// edge of the retained band.
double min_rate_at_distortion(const std::vector<double>& lambdas, double d) {
  const int n = static_cast<int>(lambdas.size());
  double best = std::numeric_limits<double>::infinity();
  double tail = 0.0;
  for (int k = n; k >= 1; --k) {
    if (tail <= d + 1e-12) {
      double rate = 0.0;
      for (int i = 0; i < k; ++i) rate += std::log2(lambdas[i] / lambdas[k - 1]);
      best = std::min(best, rate);
    }
    tail += lambdas[k - 1];
  }
  return best;
}

}  // namespace

TEST_SUITE("infotheory") {

TEST_CASE("entropy fraction endpoints") {
  const auto ident = identity_system(8);
  CHECK(positive_entropy_modes(ident) == 8);
  for (int k = 1; k <= 8; ++k)
    CHECK(entropy_fraction(ident, 1.0, k) == doctest::Approx(k / 8.0).epsilon(1e-12));

  const auto eig = eigendecompose(jakes_matrix(20, 3.0));
  const int n_pos = positive_entropy_modes(eig);
  CHECK(n_pos < 20);  // the Jakes tail dives below the floor
  CHECK(entropy_fraction(eig, 1.0, n_pos) == doctest::Approx(1.0).epsilon(1e-12));

  try {
    entropy_fraction(eig, 1.0, n_pos + 1);
    FAIL("expected parameter error");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("floor") != std::string::npos);
  }
}

TEST_CASE("mutual information values and additivity") {
  const auto ident = identity_system(4);
  CHECK(mutual_information(ident, 1.0, 1) ==
        doctest::Approx(std::log2(std::numbers::pi * std::numbers::e)).epsilon(1e-12));

  const auto eig = eigendecompose(jakes_matrix(20, 3.0));
  for (int k = 2; k <= 8; ++k) {
    const double delta = mutual_information(eig, 1.0, k) - mutual_information(eig, 1.0, k - 1);
    CHECK(delta == doctest::Approx(std::log2(std::numbers::pi * std::numbers::e *
                                             eig.eigenvalues[k - 1]))
                       .epsilon(1e-12));
  }

  // determinant route: sum of per-mode logs equals log2((pi e)^K det(eta Lambda_K))
  const double eta = 0.7;
  const int k = 5;
  double det = 1.0;
  for (int i = 0; i < k; ++i) det *= eta * eig.eigenvalues[i];
  const double via_det = k * std::log2(std::numbers::pi * std::numbers::e) + std::log2(det);
  CHECK(mutual_information(eig, eta, k) == doctest::Approx(via_det).epsilon(1e-9));
}

TEST_CASE("rd curve fixed points") {
  const std::vector<double> lams{4.0, 2.0, 1.0, 1.0};

  auto pts = rd_curve(lams, 1.0, std::vector<double>{1.0});
  CHECK(pts[0].rate_bits == doctest::Approx(3.0).epsilon(1e-12));  // log2 4 + log2 2
  CHECK(pts[0].distortion == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(pts[0].distortion_per_port == doctest::Approx(0.5).epsilon(1e-12));

  pts = rd_curve(lams, 1.0, std::vector<double>{5.0});
  CHECK(pts[0].rate_bits == 0.0);
  CHECK(pts[0].distortion == doctest::Approx(8.0).epsilon(1e-12));  // eta * N with trace 8

  // monotone in theta
  std::vector<double> grid;
  for (int i = 0; i < 50; ++i) grid.push_back(5.0 * std::pow(1e-4, i / 49.0));
  const auto curve = rd_curve(lams, 1.0, grid);
  for (std::size_t i = 1; i < curve.size(); ++i) {
    CHECK(curve[i].rate_bits >= curve[i - 1].rate_bits - 1e-12);
    CHECK(curve[i].distortion <= curve[i - 1].distortion + 1e-12);
  }

  CHECK_THROWS_AS(rd_curve(lams, 1.0, std::vector<double>{0.0}), std::invalid_argument);
}

TEST_CASE("kl operating points sit on the curve") {
  const auto eig = eigendecompose(jakes_matrix(20, 3.0));
  const double eta = 1.3;
  for (int k = 1; k <= 9; ++k) {
    const RdPoint p = kl_rd_point(eig, eta, k);
    const auto on_curve = rd_curve(eig.eigenvalues, eta, std::vector<double>{p.theta});
    CHECK(std::abs(p.rate_bits - on_curve[0].rate_bits) < 1e-9);
    CHECK(std::abs(p.distortion - on_curve[0].distortion) < 1e-9);
    CHECK(p.distortion_per_port ==
          doctest::Approx(truncate(eig, k).epsilon_k).epsilon(1e-12));
  }

  // the eigenvalue cliff at the aperture rule shows as a big rate jump
  const double jump = kl_rd_point(eig, 1.0, 7).rate_bits - kl_rd_point(eig, 1.0, 6).rate_bits;
  CHECK(jump > 5.0);

  // degenerate gap: identity spectrum has lambda_K == lambda_{K+1}
  CHECK_THROWS_AS(kl_rd_point(identity_system(4), 1.0, 2), NumericalError);
  CHECK_THROWS_AS(kl_rd_point(eig, 1.0, 0), std::invalid_argument);
  CHECK_THROWS_AS(kl_rd_point(eig, 1.0, 20), std::invalid_argument);
}

TEST_CASE("iid surrogate claims lower rate at matched distortion") {
  // The i.i.d. spectrum can always flood-or-not at zero rate spread, so its
  // rate-at-distortion never exceeds the true curve's.
  const auto eig = eigendecompose(jakes_matrix(20, 3.0));
  const std::vector<double> iid(20, 1.0);
  for (int level = 1; level <= 10; ++level) {
    const double d = 20.0 * 0.08 * level;
    CHECK(min_rate_at_distortion(iid, d) <=
          min_rate_at_distortion(eig.eigenvalues, d) + 1e-9);
  }
}

TEST_CASE("bcm surrogate is optimistic once its tail is floodable") {
  // Block spectra can only shed distortion in whole equi-correlation tails;
  // past that point they sit at-or-left of the true curve.
  const auto r = jakes_matrix(20, 3.0);
  const auto eig = eigendecompose(r);
  const auto bcm = eigendecompose(block_covariance(bcm_partition(20, 4, r), 20));
  double bcm_tail = 0.0;
  for (int k = 4; k < 20; ++k) bcm_tail += bcm.eigenvalues[k];
  for (double d : {bcm_tail * 1.001, 14.0, 16.0, 18.0}) {
    CHECK(min_rate_at_distortion(bcm.eigenvalues, d) <=
          min_rate_at_distortion(eig.eigenvalues, d) + 1e-9);
  }
}

}  // TEST_SUITE
