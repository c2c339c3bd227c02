#ifndef FASKL_INFOTHEORY_HPP
#define FASKL_INFOTHEORY_HPP

#include <span>
#include <vector>

#include "faskl/spectral.hpp"

namespace faskl {

// One operating point of the Gaussian reverse water-filling curve.
struct RdPoint {
  double rate_bits = 0.0;
  double distortion = 0.0;           // units of eta
  double distortion_per_port = 0.0;  // distortion / (eta * N)
  double theta = 0.0;                // water level
};

/// Number of eigenvalues above the positivity floor 1e-12 * lambda1; modes
/// below it carry no usable differential entropy and are excluded from
/// entropy and mutual-information sums.
int positive_entropy_modes(const EigenSystem& eig);

/// Fraction of total differential entropy captured by the top-K modes:
/// [K log(pi e) + sum_{k<=K} log(eta lambda_k)] over the same expression at
/// K = N+ (modes above the floor). K beyond N+ is a parameter error.
double entropy_fraction(const EigenSystem& eig, double eta, int modes);

/// Mutual information between the full channel and its K-mode truncation:
/// sum_{k<=K} log2(pi e eta lambda_k) bits.
double mutual_information(const EigenSystem& eig, double eta, int modes);

/// Reverse water-filling curve on a raw descending spectrum: at water level
/// theta, rate = sum max(0, log2(eta lambda_k / theta)) and distortion = the
/// full variance of the flooded modes (those with eta lambda_k <= theta).
/// Raw eigenvalue input so surrogate spectra (block models, i.i.d.) plug in.
std::vector<RdPoint> rd_curve(std::span<const double> eigenvalues, double eta,
                              std::span<const double> theta_grid);

/// KL truncation operating point at theta = eta * lambda_{K+1}. Requires a
/// strict spectral gap lambda_K > lambda_{K+1}; distortion_per_port equals
/// epsilon_K.
RdPoint kl_rd_point(const EigenSystem& eig, double eta, int modes);

}  // namespace faskl

#endif  // FASKL_INFOTHEORY_HPP
