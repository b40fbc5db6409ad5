#ifndef QLATTICE_WAVEPACKET_HPP
#define QLATTICE_WAVEPACKET_HPP

#include "qlattice/spectral.hpp"
#include "qlattice/state.hpp"

namespace qlattice {

/// Discrete Gaussian ground-state profile (staggered for repulsive dimers)
/// translated by `shift` sites. The staggered phase is applied before the
/// translation. Rejects shifts that push weight > 1e-8 past or onto the
/// boundary sites. Sectors: one-boson and dimer.
QuantumState shifted_ground_state(const SystemSpec& spec, int shift,
                                  Sector sector, bool staggered = false);

/// Superposition sum_k A_k |chi_k> over the lowest `levels` exact eigenstates
/// that maximizes the density at `target_site` under sum |A_k|^2 = 1; the
/// maximizer is A_k proportional to conj(chi_k(target_site)). The
/// decomposition must be a trapped one-boson spectrum.
QuantumState localized_packet(const SpectralDecomposition& dec,
                              const SystemSpec& spec, int target_site,
                              int levels);
/// Convenience overload that diagonalizes internally.
QuantumState localized_packet(const SystemSpec& spec, int target_site,
                              int levels);

/// Bosonic symmetrization of two one-boson states: pair amplitudes
/// a_i b_j + a_j b_i, double occupancy sqrt(2) a_j b_j, renormalized.
QuantumState symmetrized_product(const QuantumState& psi1,
                                 const QuantumState& psi2);

/// Embeds a dimer-sector state into the two-boson basis via |1D_j> = |2_j>.
QuantumState lift_dimer_state(const QuantumState& dimer_state);

}  // namespace qlattice

#endif
