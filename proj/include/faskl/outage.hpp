#ifndef FASKL_OUTAGE_HPP
#define FASKL_OUTAGE_HPP

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "faskl/channel.hpp"
#include "faskl/estimate.hpp"
#include "faskl/spectral.hpp"

namespace faskl {

/// Empirical P(max_n |g_n|^2/eta <= x) with binomial standard error.
/// The boundary is a closed event (<= counts as outage). trials >= 1000.
Estimate outage_mc(const ChannelSampler& sampler, double x, std::uint64_t trials);

/// Rank-1 closed form 1 - exp(-x / (lambda1 * c1)).
double outage_rank1(const KlTruncation& trunc, double x);

/// Gauss-Hermite tensor evaluation of the K-mode CDF (2K real dimensions),
/// clipped to [0,1]. Requires K <= 3 and quad_order <= 32; larger K is
/// refused in favor of cdf_kl_mc.
double cdf_kl_gh(const KlTruncation& trunc, double x, int quad_order);

/// Mode-space Monte Carlo of the K-mode CDF.
Estimate cdf_kl_mc(const KlTruncation& trunc, double x, std::uint64_t trials,
                   std::uint64_t seed);

// Rank-2 outage geometry: conditioned on z1, each port constrains z2 to a
// disk; ports whose second eigenvector entry is below the floor contribute a
// z2-independent constraint instead.
struct DiskSet {
  struct Disk {
    int port;
    std::complex<double> center;
    double radius;
  };
  struct LinearConstraint {
    int port;
    double gain;      // lambda1 * u_{n,1}^2
    bool satisfied;   // gain * |z1|^2 <= x
  };
  std::vector<Disk> disks;
  std::vector<LinearConstraint> linear;

  /// All disks contain z2 and all linear constraints hold.
  bool contains(std::complex<double> z2) const;
};

DiskSet rank2_disks(const KlTruncation& trunc, std::complex<double> z1, double x);

// Evaluator selection for curve sweeps.
struct Method {
  enum class Kind { exact_mc, kl_mc, kl_gh, rank1, bcm, vbcm, iid, single };
  Kind kind = Kind::exact_mc;
  int modes = 1;       // kl_mc / kl_gh
  int quad_order = 10; // kl_gh
  int blocks = 4;      // bcm
};

/// Parse "exact_mc", "kl_mc", "kl_gh", "rank1", "bcm", "vbcm", "iid",
/// "single" with the accompanying numeric parameters.
Method parse_method(std::string_view name, int modes, int quad_order, int blocks);
std::string method_label(const Method& method);

struct CurvePoint {
  double snr_db = 0.0;
  Estimate estimate;
};

/// Outage probability sweep: one row per grid point with
/// x = gamma_th / gamma_bar. Deterministic for a fixed seed.
std::vector<CurvePoint> outage_curve(const Scenario& scenario, const Method& method,
                                     std::span<const double> snr_grid_db,
                                     std::uint64_t trials, std::uint64_t seed);

}  // namespace faskl

#endif  // FASKL_OUTAGE_HPP
