#ifndef QLATTICE_ERRORS_HPP
#define QLATTICE_ERRORS_HPP

#include <stdexcept>

namespace qlattice {

// Malformed or inconsistent run configuration (CLI exit code 2).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Violated numerical guard: norm/energy drift or boundary occupancy
// (CLI exit code 3).
struct GuardViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace qlattice

#endif
