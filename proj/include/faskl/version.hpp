#ifndef FASKL_VERSION_HPP
#define FASKL_VERSION_HPP

namespace faskl {
inline constexpr const char* kVersion = "0.1.0";
}

#endif  // FASKL_VERSION_HPP
