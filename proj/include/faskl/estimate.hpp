#ifndef FASKL_ESTIMATE_HPP
#define FASKL_ESTIMATE_HPP

#include <cstdint>

namespace faskl {

// Monte Carlo result with its uncertainty. For proportions the standard
// error is sqrt(p*(1-p)/trials); for means it is the sample standard
// deviation over sqrt(trials). Deterministic quantities carry std_error 0.
struct Estimate {
  double value = 0.0;
  double std_error = 0.0;
  std::uint64_t trials = 0;
};

}  // namespace faskl

#endif  // FASKL_ESTIMATE_HPP
