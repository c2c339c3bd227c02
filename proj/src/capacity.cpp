#include "faskl/capacity.hpp"

#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <vector>

#include "faskl/baselines.hpp"
#include "faskl/errors.hpp"
#include "faskl/parallel.hpp"
#include "faskl/specfun.hpp"

namespace faskl {

Estimate capacity_mc(const ChannelSampler& sampler, double avg_snr, std::uint64_t trials) {
  if (!(avg_snr > 0.0)) throw std::invalid_argument("capacity_mc: avg_snr must be positive");
  if (trials < 1000) throw std::invalid_argument("capacity_mc: trials must be >= 1000");

  const std::size_t n_chunks = static_cast<std::size_t>((trials + kMcChunk - 1) / kMcChunk);
  std::vector<double> sum1(n_chunks, 0.0);
  std::vector<double> sum2(n_chunks, 0.0);
  run_chunked(trials, [&](std::size_t chunk, std::uint64_t first, std::uint64_t last) {
    std::vector<std::complex<double>> g(sampler.ports());
    double s1 = 0.0;
    double s2 = 0.0;
    for (std::uint64_t t = first; t < last; ++t) {
      sampler.draw_at(t, g);
      double peak = 0.0;
      for (const auto& v : g) peak = std::max(peak, std::norm(v));
      const double rate = std::log2(1.0 + avg_snr * peak);
      s1 += rate;
      s2 += rate * rate;
    }
    sum1[chunk] = s1;
    sum2[chunk] = s2;
  });

  double s1 = 0.0;
  double s2 = 0.0;
  for (std::size_t c = 0; c < n_chunks; ++c) {
    s1 += sum1[c];
    s2 += sum2[c];
  }
  const double n = static_cast<double>(trials);
  const double mean = s1 / n;
  const double var = std::max(0.0, (s2 - n * mean * mean) / (n - 1.0));
  return {mean, std::sqrt(var / n), trials};
}

double capacity_rank1(const KlTruncation& trunc, double avg_snr) {
  const double mu = avg_snr * trunc.eigenvalues[0] * trunc.c1;
  if (!(mu > 0.0)) throw NumericalError("capacity_rank1: mu = avg_snr*lambda1*c1 not positive");
  if (mu < 1e-3) {
    // e^{1/mu} E1(1/mu) ~ mu - mu^2 + 2 mu^3 for small mu
    return (mu - mu * mu + 2.0 * mu * mu * mu) / std::numbers::ln2;
  }
  return exp_scaled_e1(1.0 / mu) / std::numbers::ln2;
}

std::vector<CurvePoint> capacity_curve(const Scenario& scenario, const Method& method,
                                       std::span<const double> snr_grid_db,
                                       std::uint64_t trials, std::uint64_t seed) {
  scenario.validate();
  if (snr_grid_db.empty()) throw std::invalid_argument("capacity_curve: empty SNR grid");
  for (std::size_t i = 1; i < snr_grid_db.size(); ++i)
    if (!(snr_grid_db[i] > snr_grid_db[i - 1]))
      throw std::invalid_argument("capacity_curve: SNR grid must be ascending");
  if (method.kind == Method::Kind::kl_gh)
    throw std::invalid_argument("capacity_curve: kl_gh applies to outage only");

  KlTruncation trunc;
  std::optional<ChannelSampler> sampler;
  switch (method.kind) {
    case Method::Kind::exact_mc:
      sampler.emplace(ChannelSampler::exact(
          eigendecompose(jakes_matrix(scenario.ports, scenario.aperture)), seed));
      break;
    case Method::Kind::kl_mc:
    case Method::Kind::rank1: {
      const EigenSystem eig = eigendecompose(jakes_matrix(scenario.ports, scenario.aperture));
      trunc = truncate(eig, method.kind == Method::Kind::rank1 ? 1 : method.modes);
      if (method.kind == Method::Kind::kl_mc)
        sampler.emplace(ChannelSampler::truncated(trunc, seed));
      break;
    }
    case Method::Kind::bcm:
    case Method::Kind::vbcm: {
      const CorrelationMatrix r = jakes_matrix(scenario.ports, scenario.aperture);
      const BlockPartition part = method.kind == Method::Kind::bcm
                                      ? bcm_partition(scenario.ports, method.blocks, r)
                                      : vbcm_partition(r);
      sampler.emplace(ChannelSampler::exact(
          eigendecompose(block_covariance(part, scenario.ports)), seed));
      break;
    }
    case Method::Kind::iid: {
      std::vector<double> row(scenario.ports, 0.0);
      row[0] = 1.0;
      sampler.emplace(ChannelSampler::exact(
          eigendecompose(CorrelationMatrix::from_first_row(std::move(row))), seed));
      break;
    }
    case Method::Kind::single:
      break;  // analytic: rank-1 formula with lambda1*c1 = 1
    default:
      break;
  }

  std::vector<CurvePoint> curve;
  curve.reserve(snr_grid_db.size());
  for (double snr_db : snr_grid_db) {
    const double avg_snr = std::pow(10.0, snr_db / 10.0);
    Estimate est;
    switch (method.kind) {
      case Method::Kind::rank1:
        est = {capacity_rank1(trunc, avg_snr), 0.0, 0};
        break;
      case Method::Kind::single: {
        KlTruncation unit;
        unit.size = 1;
        unit.modes = 1;
        unit.eigenvalues = {1.0};
        unit.basis = {1.0};
        unit.c1 = 1.0;
        est = {capacity_rank1(unit, avg_snr), 0.0, 0};
        break;
      }
      default:
        est = capacity_mc(*sampler, avg_snr, trials);
        break;
    }
    curve.push_back({snr_db, est});
  }
  return curve;
}

}  // namespace faskl
