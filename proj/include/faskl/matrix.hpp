#ifndef FASKL_MATRIX_HPP
#define FASKL_MATRIX_HPP

#include <cmath>
#include <stdexcept>
#include <vector>

namespace faskl {

// Dense square matrix, row-major. Small helper type; N stays in the hundreds.
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(int n, double fill = 0.0)
      : n_(n), a_(static_cast<std::size_t>(n) * n, fill) {
    if (n <= 0) throw std::invalid_argument("SquareMatrix: size must be positive");
  }

  int size() const { return n_; }
  double& at(int r, int c) { return a_[static_cast<std::size_t>(r) * n_ + c]; }
  double at(int r, int c) const { return a_[static_cast<std::size_t>(r) * n_ + c]; }
  double* data() { return a_.data(); }
  const double* data() const { return a_.data(); }

  static SquareMatrix identity(int n) {
    SquareMatrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
  }

  double frobenius_norm() const {
    double s = 0.0;
    for (double v : a_) s += v * v;
    return std::sqrt(s);
  }

  bool is_symmetric(double tol) const {
    for (int r = 0; r < n_; ++r)
      for (int c = r + 1; c < n_; ++c)
        if (std::abs(at(r, c) - at(c, r)) > tol) return false;
    return true;
  }

 private:
  int n_ = 0;
  std::vector<double> a_;
};

}  // namespace faskl

#endif  // FASKL_MATRIX_HPP
