#ifndef FASKL_ERRORS_HPP
#define FASKL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace faskl {

// Raised when a computation leaves its numerical validity range (loss of
// positive semi-definiteness, degenerate spectral gaps, overflow guards).
// Parameter misuse raises std::invalid_argument, out-of-domain scalar
// arguments raise std::domain_error.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace faskl

#endif  // FASKL_ERRORS_HPP
