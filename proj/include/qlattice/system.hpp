#ifndef QLATTICE_SYSTEM_HPP
#define QLATTICE_SYSTEM_HPP

#include <string>

namespace qlattice {

enum class Sector { OneBoson, TwoBoson, Dimer };

const char* to_string(Sector sector);

/// Physical parameters of a tight-binding lattice with a superimposed
/// parabolic potential. Units: all energies in J, times in hbar/J;
/// lattice constant and hbar are fixed to 1. Sites run j = -M..M.
struct SystemSpec {
  double J = 1.0;      ///< tunnel coupling, > 0 (energy reference)
  double Omega = 0.0;  ///< parabolic strength, >= 0 (0 = flat lattice)
  double U = 0.0;      ///< on-site interaction, signed
  int M = 1;           ///< lattice half-width, >= 1

  void validate() const;  // throws std::invalid_argument
  int num_sites() const { return 2 * M + 1; }

  // Effective parameters for a single interaction-bound dimer,
  // second order in J/U.
  double dimer_tunneling() const;  ///< J2 = -2 J^2 / U; rejects U = 0
  double dimer_trap() const { return 2.0 * Omega; }
  double dimer_internal_energy() const { return U - dimer_tunneling(); }
};

/// Half-width of the region that supports the trap-modified band:
/// sqrt((1 + 1/sqrt(2)) J/Omega) for a single boson, with J -> |J2|,
/// Omega -> 2 Omega for the dimer. Requires Omega > 0.
double j_max(const SystemSpec& spec, Sector sector);

/// 2 floor(j_max) + 1.
int predicted_band_count(const SystemSpec& spec, Sector sector);

/// Lattice half-width for trapped runs such that the trap, not the box,
/// confines the dynamics. Single boson: ceil(2 j_max). Two-boson/dimer
/// with U != 0: ceil(max(2 j_max_dimer, j_max, sqrt(|U|/(2 Omega)))) + 5;
/// the last term covers the shell where trap offsets compensate the
/// interaction energy of an unbinding pair. Requires Omega > 0.
int default_half_width(const SystemSpec& spec, Sector sector);

}  // namespace qlattice

#endif
