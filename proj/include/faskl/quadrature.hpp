#ifndef FASKL_QUADRATURE_HPP
#define FASKL_QUADRATURE_HPP

#include <functional>
#include <span>
#include <vector>

namespace faskl {

// Gauss-Hermite rule for the weight e^{-t^2} on the real line.
// Nodes ascending and exactly antisymmetric about 0; weights positive,
// symmetric, summing to sqrt(pi).
struct QuadratureRule {
  int order = 0;
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Build a Gauss-Hermite rule of the given order (1..64) via Golub-Welsch on
/// the Jacobi matrix with off-diagonals sqrt(k/2).
QuadratureRule gauss_hermite(int order);

/// Full tensor-product reduction over `dims` dimensions:
///   sum over the order^dims grid of (prod of weights) * integrand(point).
/// No 1/pi^{dims/2} normalization is applied. Accumulation is compensated
/// (Neumaier). dims must be <= 8; larger requests are refused with the
/// grid-size estimate in the message.
double tensor_grid_reduce(const QuadratureRule& rule, int dims,
                          const std::function<double(std::span<const double>)>& integrand);

}  // namespace faskl

#endif  // FASKL_QUADRATURE_HPP
