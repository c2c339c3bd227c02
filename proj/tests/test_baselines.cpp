#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "faskl/baselines.hpp"
#include "faskl/outage.hpp"
#include "oracles.hpp"

using namespace faskl;

TEST_SUITE("baselines") {

TEST_CASE("bcm partition shapes") {
  const auto r = jakes_matrix(20, 3.0);

  const auto even = bcm_partition(20, 4, r);
  REQUIRE(even.blocks.size() == 4);
  for (const auto& b : even.blocks) CHECK(b.end - b.begin == 5);

  const auto uneven = bcm_partition(20, 3, r);
  REQUIRE(uneven.blocks.size() == 3);
  CHECK(uneven.blocks[0].end - uneven.blocks[0].begin == 7);  // larger blocks first
  CHECK(uneven.blocks[1].end - uneven.blocks[1].begin == 7);
  CHECK(uneven.blocks[2].end - uneven.blocks[2].begin == 6);
  CHECK(uneven.ports() == 20);

  const auto singletons = bcm_partition(20, 20, r);
  for (const auto& b : singletons.blocks) {
    CHECK(b.end - b.begin == 1);
    CHECK(b.rho == 0.0);
  }

  const auto all_ones = CorrelationMatrix::from_first_row(std::vector<double>(5, 1.0));
  const auto one_block = bcm_partition(5, 1, all_ones);
  REQUIRE(one_block.blocks.size() == 1);
  CHECK(one_block.blocks[0].rho == doctest::Approx(1.0).epsilon(1e-14));

  CHECK_THROWS_AS(bcm_partition(20, 0, r), std::invalid_argument);
  CHECK_THROWS_AS(bcm_partition(20, 21, r), std::invalid_argument);
  CHECK_THROWS_AS(bcm_partition(10, 2, r), std::invalid_argument);
}

TEST_CASE("vbcm partition") {
  // lag-3 is the first negative Jakes correlation at W=3, so blocks of 3
  const auto part = vbcm_partition(jakes_matrix(20, 3.0));
  REQUIRE(part.blocks.size() == 7);
  for (int d = 0; d < 6; ++d) CHECK(part.blocks[d].end - part.blocks[d].begin == 3);
  CHECK(part.blocks[6].end - part.blocks[6].begin == 2);

  std::vector<double> ident(20, 0.0);
  ident[0] = 1.0;
  CHECK(vbcm_partition(CorrelationMatrix::from_first_row(ident)).blocks.size() == 1);

  // faster decorrelation never shrinks the block count
  std::size_t prev = 0;
  for (double w : {1.0, 2.0, 3.0, 5.0}) {
    const auto p = vbcm_partition(jakes_matrix(20, w));
    CHECK(p.blocks.size() >= prev);
    prev = p.blocks.size();
  }
}

TEST_CASE("block covariance structure and spectrum") {
  const auto r = jakes_matrix(20, 3.0);

  const auto ident = block_covariance(bcm_partition(20, 20, r), 20);
  for (int i = 0; i < 20; ++i)
    for (int j = 0; j < 20; ++j) CHECK(ident.at(i, j) == (i == j ? 1.0 : 0.0));

  BlockPartition one;
  one.blocks.push_back({0, 6, 0.0});
  const auto ident6 = block_covariance(one, 6);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) CHECK(ident6.at(i, j) == (i == j ? 1.0 : 0.0));

  // equi-correlation spectrum: one eigenvalue 1 + (B-1) rho, B-1 copies of 1 - rho
  BlockPartition eq;
  eq.blocks.push_back({0, 5, 0.4});
  const auto eig = eigendecompose(block_covariance(eq, 5));
  CHECK(eig.eigenvalues[0] == doctest::Approx(1.0 + 4 * 0.4).epsilon(1e-12));
  for (int k = 1; k < 5; ++k)
    CHECK(eig.eigenvalues[k] == doctest::Approx(0.6).epsilon(1e-12));

  // partitions from the fitters stay PSD after the clamp
  for (int d : {2, 4, 7}) {
    const auto eb = eigendecompose(block_covariance(bcm_partition(20, d, r), 20));
    for (double v : eb.eigenvalues) CHECK(v >= -1e-10);
  }

  BlockPartition gap;
  gap.blocks.push_back({0, 3, 0.0});
  gap.blocks.push_back({4, 6, 0.0});
  CHECK_THROWS_AS(block_covariance(gap, 6), std::invalid_argument);
}

TEST_CASE("frobenius relative error") {
  const auto r = jakes_matrix(12, 2.0);
  CHECK(frobenius_rel_error(r, r.dense()) == 0.0);
  CHECK(frobenius_rel_error(r, SquareMatrix(12)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(frobenius_rel_error(r, SquareMatrix(5)), std::invalid_argument);
}

TEST_CASE("kl truncation dominates parameter-matched block models") {
  const auto r = jakes_matrix(20, 3.0);
  const auto dense = r.dense();
  const auto eig = eigendecompose(r);
  for (int d = 2; d <= 10; ++d) {
    const auto block = block_covariance(bcm_partition(20, d, r), 20);
    const double block_err = oracle::frobenius_diff(dense, block);
    for (int k = d; k <= 20; ++k) {
      const double kl_err = oracle::frobenius_diff(dense, oracle::rank_k_reconstruction(eig, k));
      CHECK(kl_err <= block_err + 1e-12);
    }
  }
}

TEST_CASE("scalability: fixed-k kl beats proportional bcm at large n") {
  for (int n : {40, 100}) {
    const auto r = jakes_matrix(n, 3.0);
    const auto eig = eigendecompose(r);
    SquareMatrix rk(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        double s = 0.0;
        for (int m = 0; m < 7; ++m)
          s += eig.eigenvalues[m] * eig.eigenvectors.at(i, m) * eig.eigenvectors.at(j, m);
        rk.at(i, j) = s;
      }
    const double kl = frobenius_rel_error(r, rk);
    const double bcm = frobenius_rel_error(
        r, block_covariance(bcm_partition(n, (n + 3) / 4, r), n));
    CHECK(kl < 0.1);
    CHECK(bcm > 0.5);
    CHECK(kl < bcm);
  }
}

TEST_CASE("block models underestimate outage") {
  const auto r = jakes_matrix(20, 3.0);
  const auto eig = eigendecompose(r);
  const std::uint64_t trials = 20000;
  const auto exact_sampler = ChannelSampler::exact(eig, 42);
  for (double x : {0.5, 1.0, 2.0}) {
    const auto exact = outage_mc(exact_sampler, x, trials);
    for (const auto& part : {bcm_partition(20, 4, r), vbcm_partition(r)}) {
      const auto block_eig = eigendecompose(block_covariance(part, 20));
      const auto est = outage_mc(ChannelSampler::exact(block_eig, 42), x, trials);
      CHECK(est.value <= exact.value +
                             3.0 * std::hypot(est.std_error, exact.std_error) + 1e-9);
    }
  }
}

}  // TEST_SUITE
