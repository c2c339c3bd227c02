#include "faskl/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "faskl/spectral.hpp"

namespace faskl {

namespace {

// Orthonormal Hermite polynomials for the weight e^{-t^2}:
// p0 = pi^{-1/4}, sqrt((k+1)/2) p_{k+1} = t p_k - sqrt(k/2) p_{k-1},
// derivative p_n' = sqrt(2n) p_{n-1}.
void hermite_orthonormal(int order, double t, std::vector<double>& p) {
  p.resize(order + 1);
  p[0] = std::pow(std::numbers::pi, -0.25);
  if (order >= 1) p[1] = std::sqrt(2.0) * t * p[0];
  for (int k = 1; k < order; ++k)
    p[k + 1] = (t * p[k] - std::sqrt(0.5 * k) * p[k - 1]) / std::sqrt(0.5 * (k + 1));
}

}  // namespace

QuadratureRule gauss_hermite(int order) {
  if (order < 1 || order > 64)
    throw std::invalid_argument("gauss_hermite: order must be in [1, 64]");

  QuadratureRule rule;
  rule.order = order;
  if (order == 1) {
    rule.nodes = {0.0};
    rule.weights = {std::sqrt(std::numbers::pi)};
    return rule;
  }

  // Golub-Welsch seeds: eigenvalues of the symmetric tridiagonal Jacobi
  // matrix with off-diagonals sqrt(k/2).
  SquareMatrix jac(order);
  for (int k = 1; k < order; ++k) {
    const double b = std::sqrt(0.5 * k);
    jac.at(k - 1, k) = b;
    jac.at(k, k - 1) = b;
  }
  std::vector<double> values;
  SquareMatrix vectors;
  jacobi_eigendecompose(jac, values, vectors);
  std::sort(values.begin(), values.end());

  // Newton refinement on the order-Q orthonormal polynomial, then weights
  // from the Christoffel function 1/sum p_k^2. The all-positive sum keeps
  // the far-tail weights relatively accurate where eigenvector components
  // would only be absolutely accurate.
  rule.nodes.resize(order);
  rule.weights.resize(order);
  std::vector<double> p;
  for (int j = 0; j < order; ++j) {
    double t = values[j];
    for (int it = 0; it < 4; ++it) {
      hermite_orthonormal(order, t, p);
      const double deriv = std::sqrt(2.0 * order) * p[order - 1];
      if (deriv == 0.0) break;
      const double dt = p[order] / deriv;
      t -= dt;
      if (std::abs(dt) < 1e-16 * std::max(1.0, std::abs(t))) break;
    }
    hermite_orthonormal(order, t, p);
    double christoffel = 0.0;
    for (int k = 0; k < order; ++k) christoffel += p[k] * p[k];
    rule.nodes[j] = t;
    rule.weights[j] = 1.0 / christoffel;
  }

  // Symmetrize against round-off so node[i] == -node[order-1-i] and the
  // mirrored weights match exactly.
  for (int i = 0; i < order / 2; ++i) {
    const int j = order - 1 - i;
    const double t = 0.5 * (rule.nodes[j] - rule.nodes[i]);
    rule.nodes[i] = -t;
    rule.nodes[j] = t;
    const double w = 0.5 * (rule.weights[i] + rule.weights[j]);
    rule.weights[i] = w;
    rule.weights[j] = w;
  }
  if (order % 2 == 1) rule.nodes[order / 2] = 0.0;
  return rule;
}

double tensor_grid_reduce(const QuadratureRule& rule, int dims,
                          const std::function<double(std::span<const double>)>& integrand) {
  if (dims < 1) throw std::invalid_argument("tensor_grid_reduce: dims must be positive");
  if (dims > 8) {
    const double cost = std::pow(static_cast<double>(rule.order), dims);
    throw std::invalid_argument(
        "tensor_grid_reduce: refusing " + std::to_string(dims) + " dimensions (" +
        std::to_string(rule.order) + "^" + std::to_string(dims) + " = " +
        std::to_string(cost) + " grid points); use a Monte Carlo evaluator instead");
  }
  const int q = rule.order;

  std::vector<int> index(dims, 0);
  std::vector<double> point(dims, rule.nodes[0]);

  // Odometer iteration with Neumaier-compensated accumulation.
  double sum = 0.0;
  double comp = 0.0;
  while (true) {
    double wprod = 1.0;
    for (int d = 0; d < dims; ++d) wprod *= rule.weights[index[d]];
    const double term = wprod * integrand(std::span<const double>(point.data(), dims));
    const double t = sum + term;
    if (std::abs(sum) >= std::abs(term))
      comp += (sum - t) + term;
    else
      comp += (term - t) + sum;
    sum = t;

    int d = 0;
    while (d < dims) {
      if (++index[d] < q) {
        point[d] = rule.nodes[index[d]];
        break;
      }
      index[d] = 0;
      point[d] = rule.nodes[0];
      ++d;
    }
    if (d == dims) break;
  }
  return sum + comp;
}

}  // namespace faskl
