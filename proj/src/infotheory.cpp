#include "faskl/infotheory.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "faskl/errors.hpp"

namespace faskl {
namespace {

constexpr double kFloorRel = 1e-12;  // eigenvalue positivity floor, relative to lambda1
const double kLogPiE = std::log(std::numbers::pi * std::numbers::e);

double eigen_floor(const EigenSystem& eig) {
  return kFloorRel * (eig.eigenvalues.empty() ? 0.0 : eig.eigenvalues.front());
}

}  // namespace

int positive_entropy_modes(const EigenSystem& eig) {
  const double floor = eigen_floor(eig);
  int n = 0;
  while (n < eig.size && eig.eigenvalues[n] > floor) ++n;
  return n;
}

double entropy_fraction(const EigenSystem& eig, double eta, int modes) {
  if (!(eta > 0.0)) throw std::invalid_argument("entropy_fraction: eta must be positive");
  const int n_pos = positive_entropy_modes(eig);
  if (modes < 1 || modes > n_pos)
    throw std::invalid_argument(
        "entropy_fraction: K must be in [1, " + std::to_string(n_pos) +
        "] (modes above the 1e-12*lambda1 floor)");

  auto partial = [&](int k) {
    double s = k * kLogPiE;
    for (int i = 0; i < k; ++i) s += std::log(eta * eig.eigenvalues[i]);
    return s;
  };
  return partial(modes) / partial(n_pos);
}

double mutual_information(const EigenSystem& eig, double eta, int modes) {
  if (!(eta > 0.0)) throw std::invalid_argument("mutual_information: eta must be positive");
  const int n_pos = positive_entropy_modes(eig);
  if (modes < 1 || modes > n_pos)
    throw std::invalid_argument(
        "mutual_information: K must be in [1, " + std::to_string(n_pos) +
        "] (modes above the 1e-12*lambda1 floor)");
  double bits = 0.0;
  for (int k = 0; k < modes; ++k)
    bits += std::log2(std::numbers::pi * std::numbers::e * eta * eig.eigenvalues[k]);
  return bits;
}

std::vector<RdPoint> rd_curve(std::span<const double> eigenvalues, double eta,
                              std::span<const double> theta_grid) {
  if (!(eta > 0.0)) throw std::invalid_argument("rd_curve: eta must be positive");
  if (eigenvalues.empty()) throw std::invalid_argument("rd_curve: empty spectrum");
  for (double th : theta_grid)
    if (!(th > 0.0)) throw std::invalid_argument("rd_curve: theta values must be positive");

  const double n = static_cast<double>(eigenvalues.size());
  std::vector<RdPoint> points;
  points.reserve(theta_grid.size());
  for (double theta : theta_grid) {
    RdPoint p;
    p.theta = theta;
    for (double lam : eigenvalues) {
      const double v = eta * lam;
      if (v > theta)
        p.rate_bits += std::log2(v / theta);
      else
        p.distortion += v;  // flooded mode: its full variance is lost
    }
    p.distortion_per_port = p.distortion / (eta * n);
    points.push_back(p);
  }
  return points;
}

RdPoint kl_rd_point(const EigenSystem& eig, double eta, int modes) {
  if (!(eta > 0.0)) throw std::invalid_argument("kl_rd_point: eta must be positive");
  if (modes < 1 || modes >= eig.size)
    throw std::invalid_argument("kl_rd_point: K must be in [1, N-1]");
  const double lam_k = eig.eigenvalues[modes - 1];
  const double lam_next = eig.eigenvalues[modes];
  if (lam_k - lam_next < 1e-10)
    throw NumericalError("kl_rd_point: degenerate spectral gap lambda_K ~ lambda_{K+1}");
  if (!(lam_next > 0.0))
    throw NumericalError("kl_rd_point: lambda_{K+1} vanished; the operating point sits at "
                         "infinite rate");

  RdPoint p;
  p.theta = eta * lam_next;
  for (int k = 0; k < modes; ++k) p.rate_bits += std::log2(eig.eigenvalues[k] / lam_next);
  for (int k = modes; k < eig.size; ++k) p.distortion += eta * eig.eigenvalues[k];
  p.distortion_per_port = p.distortion / (eta * eig.size);
  return p;
}

}  // namespace faskl
