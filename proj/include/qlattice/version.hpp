#ifndef QLATTICE_VERSION_HPP
#define QLATTICE_VERSION_HPP

namespace qlattice {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace qlattice

#endif
