#include "faskl/outage.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>

#include "faskl/baselines.hpp"
#include "faskl/errors.hpp"
#include "faskl/parallel.hpp"
#include "faskl/quadrature.hpp"

namespace faskl {
namespace {

constexpr double kVectorFloor = 1e-12;  // squared-entry floor for disk construction

double binomial_std_error(double p, std::uint64_t trials) {
  return std::sqrt(std::max(p * (1.0 - p), 0.0) / static_cast<double>(trials));
}

// Count of trials with max_n |g_n|^2 <= x, chunked and reduced in chunk
// order so the result is independent of the worker count.
std::uint64_t count_outages(const ChannelSampler& sampler, double x, std::uint64_t trials) {
  const std::size_t n_chunks = static_cast<std::size_t>((trials + kMcChunk - 1) / kMcChunk);
  std::vector<std::uint64_t> partial(n_chunks, 0);
  run_chunked(trials, [&](std::size_t chunk, std::uint64_t first, std::uint64_t last) {
    std::vector<std::complex<double>> g(sampler.ports());
    std::uint64_t hits = 0;
    for (std::uint64_t t = first; t < last; ++t) {
      sampler.draw_at(t, g);
      double peak = 0.0;
      for (const auto& v : g) peak = std::max(peak, std::norm(v));
      if (peak <= x) ++hits;
    }
    partial[chunk] = hits;
  });
  std::uint64_t total = 0;
  for (std::uint64_t h : partial) total += h;
  return total;
}

}  // namespace

Estimate outage_mc(const ChannelSampler& sampler, double x, std::uint64_t trials) {
  if (!(x > 0.0)) throw std::invalid_argument("outage_mc: threshold x must be positive");
  if (trials < 1000) throw std::invalid_argument("outage_mc: trials must be >= 1000");
  const double p = static_cast<double>(count_outages(sampler, x, trials)) /
                   static_cast<double>(trials);
  return {p, binomial_std_error(p, trials), trials};
}

double outage_rank1(const KlTruncation& trunc, double x) {
  if (!(x > 0.0)) throw std::invalid_argument("outage_rank1: threshold x must be positive");
  const double gain = trunc.eigenvalues[0] * trunc.c1;
  if (!(gain > 0.0))
    throw NumericalError("outage_rank1: lambda1 * c1 is not positive");
  return 1.0 - std::exp(-x / gain);
}

double cdf_kl_gh(const KlTruncation& trunc, double x, int quad_order) {
  if (!(x > 0.0)) throw std::invalid_argument("cdf_kl_gh: threshold x must be positive");
  if (trunc.modes > 3)
    throw std::invalid_argument(
        "cdf_kl_gh: K = " + std::to_string(trunc.modes) +
        " needs a " + std::to_string(2 * trunc.modes) +
        "-dimensional grid (cost Q^2K * N); use cdf_kl_mc instead");
  if (quad_order < 1 || quad_order > 32)
    throw std::invalid_argument("cdf_kl_gh: quad order must be in [1, 32]");

  const int n = trunc.size;
  const int k = trunc.modes;
  // B[n][m] = sqrt(lambda_m) u_{n,m}
  std::vector<double> b(static_cast<std::size_t>(n) * k);
  for (int r = 0; r < n; ++r)
    for (int m = 0; m < k; ++m)
      b[static_cast<std::size_t>(r) * k + m] =
          std::sqrt(trunc.eigenvalues[m]) * trunc.basis[static_cast<std::size_t>(r) * k + m];

  const QuadratureRule rule = gauss_hermite(quad_order);
  const auto indicator = [&](std::span<const double> t) -> double {
    for (int r = 0; r < n; ++r) {
      const double* row = b.data() + static_cast<std::size_t>(r) * k;
      double re = 0.0;
      double im = 0.0;
      for (int m = 0; m < k; ++m) {
        re += row[m] * t[2 * m];
        im += row[m] * t[2 * m + 1];
      }
      if (re * re + im * im > x) return 0.0;
    }
    return 1.0;
  };

  const double raw = tensor_grid_reduce(rule, 2 * k, indicator) /
                     std::pow(std::numbers::pi, k);
  return std::clamp(raw, 0.0, 1.0);
}

Estimate cdf_kl_mc(const KlTruncation& trunc, double x, std::uint64_t trials,
                   std::uint64_t seed) {
  if (trials < 1000) throw std::invalid_argument("cdf_kl_mc: trials must be >= 1000");
  return outage_mc(ChannelSampler::truncated(trunc, seed), x, trials);
}

bool DiskSet::contains(std::complex<double> z2) const {
  for (const auto& l : linear)
    if (!l.satisfied) return false;
  for (const auto& d : disks)
    if (std::norm(z2 - d.center) > d.radius * d.radius) return false;
  return true;
}

DiskSet rank2_disks(const KlTruncation& trunc, std::complex<double> z1, double x) {
  if (trunc.modes < 2) throw std::invalid_argument("rank2_disks: needs K >= 2");
  if (!(x > 0.0)) throw std::invalid_argument("rank2_disks: threshold x must be positive");

  const double l1 = trunc.eigenvalues[0];
  const double l2 = trunc.eigenvalues[1];
  DiskSet set;
  for (int r = 0; r < trunc.size; ++r) {
    const double u1 = trunc.basis[static_cast<std::size_t>(r) * trunc.modes + 0];
    const double u2 = trunc.basis[static_cast<std::size_t>(r) * trunc.modes + 1];
    if (u2 * u2 >= kVectorFloor) {
      // |a_n(z1) + b_n z2|^2 <= x with a_n = sqrt(l1) u1 z1, b_n = sqrt(l2) u2.
      const std::complex<double> center = -(std::sqrt(l1) * u1 / (std::sqrt(l2) * u2)) * z1;
      set.disks.push_back({r, center, std::sqrt(x / (l2 * u2 * u2))});
    } else {
      const double gain = l1 * u1 * u1;
      set.linear.push_back({r, gain, gain * std::norm(z1) <= x});
    }
  }
  return set;
}

Method parse_method(std::string_view name, int modes, int quad_order, int blocks) {
  Method m;
  m.modes = modes;
  m.quad_order = quad_order;
  m.blocks = blocks;
  if (name == "exact_mc") m.kind = Method::Kind::exact_mc;
  else if (name == "kl_mc") m.kind = Method::Kind::kl_mc;
  else if (name == "kl_gh") m.kind = Method::Kind::kl_gh;
  else if (name == "rank1") m.kind = Method::Kind::rank1;
  else if (name == "bcm") m.kind = Method::Kind::bcm;
  else if (name == "vbcm") m.kind = Method::Kind::vbcm;
  else if (name == "iid") m.kind = Method::Kind::iid;
  else if (name == "single") m.kind = Method::Kind::single;
  else throw std::invalid_argument("unknown method '" + std::string(name) + "'");
  return m;
}

std::string method_label(const Method& method) {
  switch (method.kind) {
    case Method::Kind::exact_mc: return "exact_mc";
    case Method::Kind::kl_mc: return "kl_mc_k" + std::to_string(method.modes);
    case Method::Kind::kl_gh:
      return "kl_gh_k" + std::to_string(method.modes) + "_q" + std::to_string(method.quad_order);
    case Method::Kind::rank1: return "rank1";
    case Method::Kind::bcm: return "bcm_d" + std::to_string(method.blocks);
    case Method::Kind::vbcm: return "vbcm";
    case Method::Kind::iid: return "iid";
    case Method::Kind::single: return "single";
  }
  return "?";
}

std::vector<CurvePoint> outage_curve(const Scenario& scenario, const Method& method,
                                     std::span<const double> snr_grid_db,
                                     std::uint64_t trials, std::uint64_t seed) {
  scenario.validate();
  if (snr_grid_db.empty()) throw std::invalid_argument("outage_curve: empty SNR grid");
  for (std::size_t i = 1; i < snr_grid_db.size(); ++i)
    if (!(snr_grid_db[i] > snr_grid_db[i - 1]))
      throw std::invalid_argument("outage_curve: SNR grid must be ascending");

  // Shared per-method setup, hoisted out of the grid loop.
  KlTruncation trunc;
  std::optional<ChannelSampler> sampler;
  switch (method.kind) {
    case Method::Kind::exact_mc:
      sampler.emplace(ChannelSampler::exact(
          eigendecompose(jakes_matrix(scenario.ports, scenario.aperture)), seed));
      break;
    case Method::Kind::kl_mc:
    case Method::Kind::kl_gh:
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
    case Method::Kind::iid:
    case Method::Kind::single:
      break;  // analytic
  }

  std::vector<CurvePoint> curve;
  curve.reserve(snr_grid_db.size());
  for (double snr_db : snr_grid_db) {
    const double avg_snr = std::pow(10.0, snr_db / 10.0);
    const double x = scenario.gamma_th / avg_snr;
    Estimate est;
    switch (method.kind) {
      case Method::Kind::rank1:
        est = {outage_rank1(trunc, x), 0.0, 0};
        break;
      case Method::Kind::kl_gh:
        est = {cdf_kl_gh(trunc, x, method.quad_order), 0.0, 0};
        break;
      case Method::Kind::iid: {
        const double p1 = 1.0 - std::exp(-x);
        est = {std::pow(p1, scenario.ports), 0.0, 0};
        break;
      }
      case Method::Kind::single:
        est = {1.0 - std::exp(-x), 0.0, 0};
        break;
      default:
        est = outage_mc(*sampler, x, trials);
        break;
    }
    curve.push_back({snr_db, est});
  }
  return curve;
}

}  // namespace faskl
