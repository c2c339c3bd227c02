#ifndef FASKL_SPECTRAL_HPP
#define FASKL_SPECTRAL_HPP

#include <vector>

#include "faskl/matrix.hpp"

namespace faskl {

// Real symmetric Toeplitz correlation matrix with unit diagonal, stored by
// its first row.
class CorrelationMatrix {
 public:
  static CorrelationMatrix from_first_row(std::vector<double> first_row);

  int size() const { return static_cast<int>(row_.size()); }
  double entry(int k, int l) const { return row_[k > l ? k - l : l - k]; }
  const std::vector<double>& first_row() const { return row_; }
  SquareMatrix dense() const;

 private:
  explicit CorrelationMatrix(std::vector<double> row) : row_(std::move(row)) {}
  std::vector<double> row_;
};

// Eigenvalues in descending order (non-negative after round-off clamping)
// with orthonormal eigenvectors as columns.
struct EigenSystem {
  int size = 0;
  std::vector<double> eigenvalues;
  SquareMatrix eigenvectors;
};

// Top-K slice of an EigenSystem plus the derived truncation metrics.
struct KlTruncation {
  int size = 0;   // ports N
  int modes = 0;  // retained modes K
  std::vector<double> eigenvalues;  // first K, descending
  std::vector<double> basis;        // N x K row-major: basis[n*modes + k] = u_{n,k}
  double epsilon_k = 0.0;           // discarded power fraction
  double c1 = 0.0;                  // peak squared entry of the dominant eigenvector
};

/// Jakes spatial correlation: entry(k,l) = J0(2*pi*|k-l|*W/(N-1)).
/// N = 1 returns the 1x1 identity.
CorrelationMatrix jakes_matrix(int ports, double aperture);

/// Raw cyclic-Jacobi symmetric eigensolver. Values come out unsorted with
/// eigenvectors in the matching columns. Deterministic sweep order.
void jacobi_eigendecompose(const SquareMatrix& a, std::vector<double>& values,
                           SquareMatrix& vectors);

/// Deterministic eigendecomposition: descending stable sort, sign convention
/// (largest-magnitude entry positive, earliest index on ties), eigenvalues in
/// [-1e-8*lambda1, 0) clamped to zero. More negative values raise
/// NumericalError.
EigenSystem eigendecompose(const SquareMatrix& symmetric);
EigenSystem eigendecompose(const CorrelationMatrix& r);

/// Slice the top-K modes and compute epsilon_K and c1.
KlTruncation truncate(const EigenSystem& eig, int modes);

/// Smallest K whose retained power reaches (1 - eps0) of the trace.
int min_modes(const EigenSystem& eig, double eps0);

/// Aperture-only mode-count rule 2*ceil(W) + 1.
int dof_rule(double aperture);

struct LowRankError {
  double frobenius = 0.0;      // sqrt(sum of squared discarded eigenvalues)
  double operator_norm = 0.0;  // first discarded eigenvalue
};
LowRankError lowrank_errors(const EigenSystem& eig, int modes);

}  // namespace faskl

#endif  // FASKL_SPECTRAL_HPP
