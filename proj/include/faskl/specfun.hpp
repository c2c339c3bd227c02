#ifndef FASKL_SPECFUN_HPP
#define FASKL_SPECFUN_HPP

namespace faskl {

/// Bessel function of the first kind, order zero.
/// Absolute error below 1e-12 for |x| <= 50. Throws std::domain_error on
/// non-finite input.
double bessel_j0(double x);

/// Exponential integral E1(x) = \int_x^inf t^{-1} e^{-t} dt, x > 0.
/// Relative error below 1e-10. Throws std::domain_error for x <= 0.
double exp_integral_e1(double x);

/// e^x * E1(x), x > 0. Stable for large x where exp(x) alone would overflow.
double exp_scaled_e1(double x);

}  // namespace faskl

#endif  // FASKL_SPECFUN_HPP
