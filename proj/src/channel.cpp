#include "faskl/channel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace faskl {

void Scenario::validate() const {
  if (ports < 1) throw std::invalid_argument("Scenario: ports must be positive");
  if (!(aperture > 0.0)) throw std::invalid_argument("Scenario: aperture must be positive");
  if (!(eta > 0.0)) throw std::invalid_argument("Scenario: eta must be positive");
  if (!(avg_snr > 0.0)) throw std::invalid_argument("Scenario: avg_snr must be positive");
  if (!(gamma_th > 0.0)) throw std::invalid_argument("Scenario: gamma_th must be positive");
}

namespace {

constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;
constexpr std::uint32_t kPhiloxW0 = 0x9E3779B9u;
constexpr std::uint32_t kPhiloxW1 = 0xBB67AE85u;

inline void mul_hi_lo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo) {
  const std::uint64_t p = static_cast<std::uint64_t>(a) * b;
  hi = static_cast<std::uint32_t>(p >> 32);
  lo = static_cast<std::uint32_t>(p);
}

}  // namespace

std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        std::array<std::uint32_t, 2> key) {
  for (int round = 0; round < 10; ++round) {
    std::uint32_t hi0, lo0, hi1, lo1;
    mul_hi_lo(kPhiloxM0, counter[0], hi0, lo0);
    mul_hi_lo(kPhiloxM1, counter[2], hi1, lo1);
    counter = {hi1 ^ counter[1] ^ key[0], lo1, hi0 ^ counter[3] ^ key[1], lo0};
    key[0] += kPhiloxW0;
    key[1] += kPhiloxW1;
  }
  return counter;
}

ChannelSampler::ChannelSampler(int ports, int modes, std::vector<double> factor,
                               std::uint64_t seed, std::uint32_t mode_offset)
    : ports_(ports), modes_(modes), mode_offset_(mode_offset),
      factor_(std::move(factor)), seed_(seed) {
  if (ports_ < 1 || modes_ < 1)
    throw std::invalid_argument("ChannelSampler: ports and modes must be positive");
  if (factor_.size() != static_cast<std::size_t>(ports_) * modes_)
    throw std::invalid_argument("ChannelSampler: factor shape mismatch");
}

ChannelSampler ChannelSampler::exact(const EigenSystem& eig, std::uint64_t seed) {
  const int n = eig.size;
  std::vector<double> factor(static_cast<std::size_t>(n) * n);
  for (int r = 0; r < n; ++r)
    for (int k = 0; k < n; ++k)
      factor[static_cast<std::size_t>(r) * n + k] =
          eig.eigenvectors.at(r, k) * std::sqrt(eig.eigenvalues[k]);
  return ChannelSampler(n, n, std::move(factor), seed);
}

ChannelSampler ChannelSampler::truncated(const KlTruncation& trunc, std::uint64_t seed) {
  const int n = trunc.size;
  const int k = trunc.modes;
  std::vector<double> factor(static_cast<std::size_t>(n) * k);
  for (int r = 0; r < n; ++r)
    for (int m = 0; m < k; ++m)
      factor[static_cast<std::size_t>(r) * k + m] =
          trunc.basis[static_cast<std::size_t>(r) * k + m] * std::sqrt(trunc.eigenvalues[m]);
  return ChannelSampler(n, k, std::move(factor), seed);
}

ChannelSampler ChannelSampler::residual(const EigenSystem& eig, int modes, std::uint64_t seed) {
  if (modes < 1 || modes >= eig.size)
    throw std::invalid_argument("ChannelSampler::residual: modes must be in [1, N)");
  const int n = eig.size;
  const int rest = n - modes;
  std::vector<double> factor(static_cast<std::size_t>(n) * rest);
  for (int r = 0; r < n; ++r)
    for (int k = 0; k < rest; ++k)
      factor[static_cast<std::size_t>(r) * rest + k] =
          eig.eigenvectors.at(r, modes + k) * std::sqrt(eig.eigenvalues[modes + k]);
  return ChannelSampler(n, rest, std::move(factor), seed,
                        static_cast<std::uint32_t>(modes));
}

std::complex<double> ChannelSampler::mode_at(std::uint64_t trial, int mode) const {
  const std::array<std::uint32_t, 4> ctr = {
      static_cast<std::uint32_t>(trial),
      static_cast<std::uint32_t>(trial >> 32),
      mode_offset_ + static_cast<std::uint32_t>(mode),
      0u,
  };
  const std::array<std::uint32_t, 2> key = {
      static_cast<std::uint32_t>(seed_),
      static_cast<std::uint32_t>(seed_ >> 32),
  };
  const auto r = philox4x32(ctr, key);
  const std::uint64_t a = (static_cast<std::uint64_t>(r[1]) << 32) | r[0];
  const std::uint64_t b = (static_cast<std::uint64_t>(r[3]) << 32) | r[2];
  // u1 in (0, 1], u2 in [0, 1): polar transform gives |z|^2 ~ Exp(1) exactly
  // and real/imag parts each N(0, 1/2).
  const double u1 = static_cast<double>((a >> 11) + 1) * 0x1p-53;
  const double u2 = static_cast<double>(b >> 11) * 0x1p-53;
  const double radius = std::sqrt(-std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  return {radius * std::cos(angle), radius * std::sin(angle)};
}

void ChannelSampler::draw_at(std::uint64_t trial, std::span<std::complex<double>> out) const {
  if (out.size() != static_cast<std::size_t>(ports_))
    throw std::invalid_argument("ChannelSampler::draw_at: output span size mismatch");
  for (auto& v : out) v = {0.0, 0.0};
  for (int k = 0; k < modes_; ++k) {
    const std::complex<double> z = mode_at(trial, k);
    const double* col = factor_.data() + k;
    for (int r = 0; r < ports_; ++r) {
      const double f = col[static_cast<std::size_t>(r) * modes_];
      out[r] += std::complex<double>(f * z.real(), f * z.imag());
    }
  }
}

void ChannelSampler::next(std::span<std::complex<double>> out) {
  draw_at(position_, out);
  ++position_;
}

}  // namespace faskl
