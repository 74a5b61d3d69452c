#ifndef AMWP_VERSION_HPP
#define AMWP_VERSION_HPP

namespace amwp {

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace amwp

#endif  // AMWP_VERSION_HPP
