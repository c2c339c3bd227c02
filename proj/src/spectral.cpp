#include "faskl/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

#include "faskl/errors.hpp"
#include "faskl/specfun.hpp"

namespace faskl {

CorrelationMatrix CorrelationMatrix::from_first_row(std::vector<double> first_row) {
  if (first_row.empty())
    throw std::invalid_argument("CorrelationMatrix: empty first row");
  if (std::abs(first_row[0] - 1.0) > 1e-12)
    throw std::invalid_argument("CorrelationMatrix: diagonal must be 1");
  for (double v : first_row)
    if (!(std::abs(v) <= 1.0 + 1e-12))
      throw std::invalid_argument("CorrelationMatrix: entries must lie in [-1, 1]");
  return CorrelationMatrix(std::move(first_row));
}

SquareMatrix CorrelationMatrix::dense() const {
  const int n = size();
  SquareMatrix m(n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m.at(r, c) = entry(r, c);
  return m;
}

CorrelationMatrix jakes_matrix(int ports, double aperture) {
  if (ports < 1) throw std::invalid_argument("jakes_matrix: ports must be positive");
  if (!(aperture > 0.0)) throw std::invalid_argument("jakes_matrix: aperture must be positive");
  if (ports == 1) return CorrelationMatrix::from_first_row({1.0});  // single-antenna case

  std::vector<double> row(ports);
  const double scale = 2.0 * std::numbers::pi * aperture / (ports - 1);
  for (int d = 0; d < ports; ++d) row[d] = bessel_j0(scale * d);
  return CorrelationMatrix::from_first_row(std::move(row));
}

void jacobi_eigendecompose(const SquareMatrix& a, std::vector<double>& values,
                           SquareMatrix& vectors) {
  const int n = a.size();
  SquareMatrix m = a;
  vectors = SquareMatrix::identity(n);

  auto off_norm = [&]() {
    double s = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) s += m.at(p, q) * m.at(p, q);
    return std::sqrt(2.0 * s);
  };

  const double full_norm = std::max(a.frobenius_norm(), 1e-300);
  const double target = 1e-13 * full_norm;

  for (int sweep = 0; sweep < 50 && off_norm() > target; ++sweep) {
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = m.at(p, q);
        if (apq == 0.0) continue;
        const double app = m.at(p, p);
        const double aqq = m.at(q, q);
        // Stable rotation (Golub & Van Loan 8.4.1).
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        for (int k = 0; k < n; ++k) {
          const double mkp = m.at(k, p);
          const double mkq = m.at(k, q);
          m.at(k, p) = c * mkp - s * mkq;
          m.at(k, q) = s * mkp + c * mkq;
        }
        for (int k = 0; k < n; ++k) {
          const double mpk = m.at(p, k);
          const double mqk = m.at(q, k);
          m.at(p, k) = c * mpk - s * mqk;
          m.at(q, k) = s * mpk + c * mqk;
        }
        for (int k = 0; k < n; ++k) {
          const double vkp = vectors.at(k, p);
          const double vkq = vectors.at(k, q);
          vectors.at(k, p) = c * vkp - s * vkq;
          vectors.at(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  values.resize(n);
  for (int i = 0; i < n; ++i) values[i] = m.at(i, i);
}

EigenSystem eigendecompose(const SquareMatrix& symmetric) {
  const int n = symmetric.size();
  if (!symmetric.is_symmetric(1e-10 * std::max(1.0, symmetric.frobenius_norm())))
    throw std::invalid_argument("eigendecompose: matrix is not symmetric");

  std::vector<double> raw_values;
  SquareMatrix raw_vectors;
  jacobi_eigendecompose(symmetric, raw_values, raw_vectors);

  // Descending stable sort; ties keep the original Jacobi column order.
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](int a, int b) { return raw_values[a] > raw_values[b]; });

  EigenSystem eig;
  eig.size = n;
  eig.eigenvalues.resize(n);
  eig.eigenvectors = SquareMatrix(n);
  for (int k = 0; k < n; ++k) {
    eig.eigenvalues[k] = raw_values[idx[k]];
    // Sign convention: largest-magnitude entry positive, earliest index on
    // magnitude ties, so repeated runs are bit-identical.
    int peak = 0;
    double peak_abs = -1.0;
    for (int r = 0; r < n; ++r) {
      const double v = std::abs(raw_vectors.at(r, idx[k]));
      if (v > peak_abs) {
        peak_abs = v;
        peak = r;
      }
    }
    const double flip = raw_vectors.at(peak, idx[k]) < 0.0 ? -1.0 : 1.0;
    for (int r = 0; r < n; ++r) eig.eigenvectors.at(r, k) = flip * raw_vectors.at(r, idx[k]);
  }

  const double lambda1 = std::max(eig.eigenvalues.front(), 1e-300);
  for (double& v : eig.eigenvalues) {
    if (v < -1e-8 * lambda1)
      throw NumericalError("eigendecompose: eigenvalue " + std::to_string(v) +
                           " below the PSD round-off band");
    if (v < 0.0) v = 0.0;
  }
  return eig;
}

EigenSystem eigendecompose(const CorrelationMatrix& r) { return eigendecompose(r.dense()); }

KlTruncation truncate(const EigenSystem& eig, int modes) {
  if (modes < 1 || modes > eig.size)
    throw std::invalid_argument("truncate: modes must be in [1, N]");

  KlTruncation t;
  t.size = eig.size;
  t.modes = modes;
  t.eigenvalues.assign(eig.eigenvalues.begin(), eig.eigenvalues.begin() + modes);
  t.basis.resize(static_cast<std::size_t>(eig.size) * modes);
  for (int r = 0; r < eig.size; ++r)
    for (int k = 0; k < modes; ++k)
      t.basis[static_cast<std::size_t>(r) * modes + k] = eig.eigenvectors.at(r, k);

  double retained = 0.0;
  for (double v : t.eigenvalues) retained += v;
  t.epsilon_k = 1.0 - retained / eig.size;

  double peak = 0.0;
  for (int r = 0; r < eig.size; ++r) {
    const double u = eig.eigenvectors.at(r, 0);
    peak = std::max(peak, u * u);
  }
  t.c1 = peak;
  return t;
}

int min_modes(const EigenSystem& eig, double eps0) {
  if (!(eps0 > 0.0 && eps0 < 1.0))
    throw std::invalid_argument("min_modes: eps0 must be in (0, 1)");
  const double target = (1.0 - eps0) * eig.size;
  double cum = 0.0;
  for (int k = 0; k < eig.size; ++k) {
    cum += eig.eigenvalues[k];
    if (cum >= target) return k + 1;
  }
  return eig.size;
}

int dof_rule(double aperture) {
  if (!(aperture > 0.0)) throw std::invalid_argument("dof_rule: aperture must be positive");
  return 2 * static_cast<int>(std::ceil(aperture)) + 1;
}

LowRankError lowrank_errors(const EigenSystem& eig, int modes) {
  if (modes < 1 || modes > eig.size)
    throw std::invalid_argument("lowrank_errors: modes must be in [1, N]");
  LowRankError e;
  double s = 0.0;
  for (int k = modes; k < eig.size; ++k) s += eig.eigenvalues[k] * eig.eigenvalues[k];
  e.frobenius = std::sqrt(s);
  e.operator_norm = modes < eig.size ? eig.eigenvalues[modes] : 0.0;
  return e;
}

}  // namespace faskl
