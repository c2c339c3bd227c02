#ifndef FASKL_CHANNEL_HPP
#define FASKL_CHANNEL_HPP

#include <array>
#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "faskl/spectral.hpp"

namespace faskl {

// Experiment configuration. All quantities linear; dB conversion happens at
// the CLI boundary only. Path-loss factors are folded into avg_snr.
struct Scenario {
  int ports = 20;
  double aperture = 3.0;   // W (aperture = W * wavelength)
  double eta = 1.0;        // mean channel power per port
  double avg_snr = 1.0;    // gamma-bar
  double gamma_th = 1.0;   // outage SNR threshold

  void validate() const;
  double threshold_x() const { return gamma_th / avg_snr; }
};

// Philox4x32-10 counter-based generator block function.
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        std::array<std::uint32_t, 2> key);

// Seeded sampler for correlated complex Gaussian channel vectors, normalized
// as g/sqrt(eta). A draw is UK * Lambda_K^{1/2} * z with z i.i.d. standard
// complex Gaussian. Every mode variate is a pure function of
// (seed, trial, absolute mode index), so draws are random-access and
// parallel chunking cannot change results.
class ChannelSampler {
 public:
  ChannelSampler(int ports, int modes, std::vector<double> factor,
                 std::uint64_t seed, std::uint32_t mode_offset = 0);

  static ChannelSampler exact(const EigenSystem& eig, std::uint64_t seed);
  static ChannelSampler truncated(const KlTruncation& trunc, std::uint64_t seed);
  // Discarded-mode complement of truncated(); shares the mode stream so that
  // (truncated + residual) reproduces the exact channel draw for draw.
  static ChannelSampler residual(const EigenSystem& eig, int modes, std::uint64_t seed);

  int ports() const { return ports_; }
  int modes() const { return modes_; }
  std::uint64_t seed() const { return seed_; }
  std::uint64_t position() const { return position_; }
  const std::vector<double>& factor() const { return factor_; }

  /// z for (trial, mode); CN(0,1) via the polar transform of two Philox
  /// uniforms.
  std::complex<double> mode_at(std::uint64_t trial, int mode) const;

  /// Channel vector for a given trial index (random access).
  void draw_at(std::uint64_t trial, std::span<std::complex<double>> out) const;

  /// Sequential draw; advances the stream position.
  void next(std::span<std::complex<double>> out);

 private:
  int ports_ = 0;
  int modes_ = 0;
  std::uint32_t mode_offset_ = 0;
  std::vector<double> factor_;  // ports x modes row-major
  std::uint64_t seed_ = 0;
  std::uint64_t position_ = 0;
};

}  // namespace faskl

#endif  // FASKL_CHANNEL_HPP
