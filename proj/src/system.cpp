#include "qlattice/system.hpp"

#include <cmath>
#include <stdexcept>

namespace qlattice {

const char* to_string(Sector sector) {
  switch (sector) {
    case Sector::OneBoson: return "one-boson";
    case Sector::TwoBoson: return "two-boson";
    case Sector::Dimer: return "dimer";
  }
  return "?";
}

void SystemSpec::validate() const {
  if (!(J > 0.0) || !std::isfinite(J))
    throw std::invalid_argument("SystemSpec: J must be positive and finite");
  if (!(Omega >= 0.0) || !std::isfinite(Omega))
    throw std::invalid_argument("SystemSpec: Omega must be >= 0 and finite");
  if (!std::isfinite(U))
    throw std::invalid_argument("SystemSpec: U must be finite");
  if (M < 1) throw std::invalid_argument("SystemSpec: M must be >= 1");
}

double SystemSpec::dimer_tunneling() const {
  if (U == 0.0)
    throw std::invalid_argument("dimer_tunneling: undefined for U = 0");
  return -2.0 * J * J / U;
}

namespace {
constexpr double kBandPrefactor = 1.0 + 0.70710678118654752440;  // 1 + 1/sqrt(2)
}

double j_max(const SystemSpec& spec, Sector sector) {
  spec.validate();
  if (!(spec.Omega > 0.0))
    throw std::invalid_argument("j_max: requires Omega > 0");
  switch (sector) {
    case Sector::OneBoson:
      return std::sqrt(kBandPrefactor * spec.J / spec.Omega);
    case Sector::Dimer:
      return std::sqrt(kBandPrefactor * std::abs(spec.dimer_tunneling()) /
                       spec.dimer_trap());
    case Sector::TwoBoson:
      break;
  }
  throw std::invalid_argument("j_max: defined for one-boson and dimer sectors");
}

int predicted_band_count(const SystemSpec& spec, Sector sector) {
  return 2 * static_cast<int>(std::floor(j_max(spec, sector))) + 1;
}

int default_half_width(const SystemSpec& spec, Sector sector) {
  spec.validate();
  if (!(spec.Omega > 0.0))
    throw std::invalid_argument("default_half_width: requires Omega > 0");
  const double single = j_max(spec, Sector::OneBoson);
  if (sector == Sector::OneBoson)
    return static_cast<int>(std::ceil(2.0 * single));
  if (spec.U == 0.0) return static_cast<int>(std::ceil(2.0 * single));
  const double dimer = j_max(spec, Sector::Dimer);
  const double unbinding_shell = std::sqrt(std::abs(spec.U) / (2.0 * spec.Omega));
  const double reach = std::max({2.0 * dimer, single, unbinding_shell});
  return static_cast<int>(std::ceil(reach)) + 5;
}

}  // namespace qlattice
