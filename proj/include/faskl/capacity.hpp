#ifndef FASKL_CAPACITY_HPP
#define FASKL_CAPACITY_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "faskl/channel.hpp"
#include "faskl/estimate.hpp"
#include "faskl/outage.hpp"

namespace faskl {

/// Ergodic rate E[log2(1 + avg_snr * max_n |g_n|^2/eta)] by Monte Carlo,
/// with sample-standard-deviation based standard error. trials >= 1000.
Estimate capacity_mc(const ChannelSampler& sampler, double avg_snr, std::uint64_t trials);

/// Rank-1 closed form e^{1/mu} E1(1/mu) / ln 2 with mu = avg_snr*lambda1*c1.
/// Small mu is routed through the asymptotic series, large 1/mu through the
/// scaled continued fraction, so no overflow/underflow pairing occurs.
double capacity_rank1(const KlTruncation& trunc, double avg_snr);

/// Ergodic capacity sweep over an SNR grid (same method set as outage_curve;
/// kl_gh is not available for capacity).
std::vector<CurvePoint> capacity_curve(const Scenario& scenario, const Method& method,
                                       std::span<const double> snr_grid_db,
                                       std::uint64_t trials, std::uint64_t seed);

}  // namespace faskl

#endif  // FASKL_CAPACITY_HPP
