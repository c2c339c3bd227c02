#ifndef FASKL_BASELINES_HPP
#define FASKL_BASELINES_HPP

#include <vector>

#include "faskl/matrix.hpp"
#include "faskl/spectral.hpp"

namespace faskl {

// Contiguous partition of the ports into equi-correlated blocks. rho is
// clamped to the PSD-valid range [-1/(B-1), 1]; singleton blocks carry 0.
struct BlockPartition {
  struct Block {
    int begin = 0;  // inclusive
    int end = 0;    // exclusive
    double rho = 0.0;
  };
  std::vector<Block> blocks;

  int ports() const { return blocks.empty() ? 0 : blocks.back().end; }
};

/// Block-correlation model: D contiguous blocks of size floor(N/D) or
/// ceil(N/D) (larger blocks first); each rho is the mean of the true
/// correlations within the block.
BlockPartition bcm_partition(int ports, int blocks, const CorrelationMatrix& r);

/// Variable BCM: greedy scan opening a new block at the first port whose
/// correlation with the current block's anchor (its first port) is negative.
BlockPartition vbcm_partition(const CorrelationMatrix& r);

/// Block-diagonal covariance surrogate: (1-rho) I + rho 11^T per block.
SquareMatrix block_covariance(const BlockPartition& partition, int ports);

/// ||R - approx||_F / ||R||_F.
double frobenius_rel_error(const CorrelationMatrix& r, const SquareMatrix& approx);

}  // namespace faskl

#endif  // FASKL_BASELINES_HPP
