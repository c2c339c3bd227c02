#include "faskl/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "faskl/errors.hpp"

namespace faskl {
namespace {

// Mean of the true correlations inside [begin, end), clamped to the
// PSD-valid equi-correlation range. Singleton blocks have no pairs: 0.
double fit_rho(const CorrelationMatrix& r, int begin, int end) {
  const int size = end - begin;
  if (size <= 1) return 0.0;
  double sum = 0.0;
  for (int i = begin; i < end; ++i)
    for (int j = i + 1; j < end; ++j) sum += r.entry(i, j);
  const double mean = sum / (0.5 * size * (size - 1));
  return std::clamp(mean, -1.0 / (size - 1), 1.0);
}

}  // namespace

BlockPartition bcm_partition(int ports, int blocks, const CorrelationMatrix& r) {
  if (ports < 1) throw std::invalid_argument("bcm_partition: ports must be positive");
  if (blocks < 1 || blocks > ports)
    throw std::invalid_argument("bcm_partition: blocks must be in [1, ports]");
  if (r.size() != ports)
    throw std::invalid_argument("bcm_partition: correlation matrix size mismatch");

  const int base = ports / blocks;
  const int remainder = ports % blocks;
  BlockPartition part;
  int at = 0;
  for (int d = 0; d < blocks; ++d) {
    const int size = base + (d < remainder ? 1 : 0);  // larger blocks first
    part.blocks.push_back({at, at + size, fit_rho(r, at, at + size)});
    at += size;
  }
  return part;
}

BlockPartition vbcm_partition(const CorrelationMatrix& r) {
  const int n = r.size();
  BlockPartition part;
  int anchor = 0;
  for (int port = 1; port < n; ++port) {
    if (r.entry(anchor, port) < 0.0) {
      part.blocks.push_back({anchor, port, fit_rho(r, anchor, port)});
      anchor = port;
    }
  }
  part.blocks.push_back({anchor, n, fit_rho(r, anchor, n)});
  return part;
}

SquareMatrix block_covariance(const BlockPartition& partition, int ports) {
  if (partition.blocks.empty() || partition.ports() != ports)
    throw std::invalid_argument("block_covariance: partition does not cover the ports");
  int expect = 0;
  for (const auto& b : partition.blocks) {
    if (b.begin != expect || b.end <= b.begin)
      throw std::invalid_argument("block_covariance: blocks must be contiguous and in order");
    const int size = b.end - b.begin;
    if (size > 1 && (b.rho < -1.0 / (size - 1) - 1e-12 || b.rho > 1.0 + 1e-12))
      throw NumericalError("block_covariance: rho outside the PSD range after clamping");
    expect = b.end;
  }

  SquareMatrix m(ports);
  for (const auto& b : partition.blocks)
    for (int i = b.begin; i < b.end; ++i)
      for (int j = b.begin; j < b.end; ++j) m.at(i, j) = i == j ? 1.0 : b.rho;
  return m;
}

double frobenius_rel_error(const CorrelationMatrix& r, const SquareMatrix& approx) {
  if (approx.size() != r.size())
    throw std::invalid_argument("frobenius_rel_error: dimension mismatch");
  double diff = 0.0;
  for (int i = 0; i < r.size(); ++i)
    for (int j = 0; j < r.size(); ++j) {
      const double d = r.entry(i, j) - approx.at(i, j);
      diff += d * d;
    }
  return std::sqrt(diff) / r.dense().frobenius_norm();
}

}  // namespace faskl
