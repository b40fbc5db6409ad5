#ifndef QLATTICE_DYNAMICS_HPP
#define QLATTICE_DYNAMICS_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qlattice/spectral.hpp"

namespace qlattice {

/// States sampled along a unitary evolution. Times ascend, units hbar/J.
struct Trajectory {
  std::vector<double> times;
  std::vector<QuantumState> states;
  std::string provenance;  ///< "exact-single" | "exact-two-boson" | "effective-dimer"
};

std::string provenance_of(const FockBasis& basis);

/// psi(t) = sum_k exp(-i E_k t) <chi_k|psi0> |chi_k>, exact to
/// diagonalization accuracy at any t.
Trajectory evolve(const SpectralDecomposition& dec, const QuantumState& psi0,
                  const std::vector<double>& times);
QuantumState evolve_to(const SpectralDecomposition& dec,
                       const QuantumState& psi0, double t);

/// Atom density <n_j> per site (index j + M). One boson: |a_j|^2; two
/// bosons: sum over pair states containing j plus 2 |<2_j|psi>|^2; dimer
/// sector: 2 |a_j|^2.
Eigen::VectorXd density(const QuantumState& psi);

/// Weight of doubly-occupied configurations, sum_j |<2_j|psi>|^2
/// (two-boson sector only).
double pair_projection(const QuantumState& psi);
double monomer_admixture(const QuantumState& psi);  ///< 1 - pair_projection

/// Density-weighted mean site <j>.
double center_of_mass(const QuantumState& psi);

/// Max density on the outermost site of each side (j = -M and j = +M).
double boundary_occupancy(const QuantumState& psi);

/// Dominant nonzero frequency of the series by windowed zero-padded DFT with
/// parabolic peak refinement; returns the corresponding period, or nullopt
/// when no peak rises above the noise floor (aperiodic signal). Times must
/// be uniformly spaced.
std::optional<double> estimate_period(const std::vector<double>& times,
                                      const std::vector<double>& values);

/// Throws GuardViolation unless max |norm-1| <= 1e-10 and
/// max |<H>(t) - <H>(0)| <= 1e-9 * ||H|| along the trajectory.
void check_trajectory_invariants(const Trajectory& traj,
                                 const HamiltonianMatrix& h,
                                 const SpectralDecomposition& dec);

/// Throws GuardViolation when any sampled state puts more than `tol` density
/// on a boundary site.
void check_boundary_guard(const Trajectory& traj, double tol = 1e-6);

/// Chebyshev expansion of exp(-i H t) |psi>; alternative propagator for
/// matrices too large to diagonalize. Spectral bounds from Gershgorin discs.
QuantumState chebyshev_evolve(const HamiltonianMatrix& h,
                              const QuantumState& psi0, double t);

/// CSV rows `t,rho_-M,...,rho_M[,pair_proj],com`; pair_proj only in the
/// two-boson sector.
void write_trajectory_csv(const Trajectory& traj, std::ostream& os);

/// samples uniformly spaced times covering [0, t_max].
std::vector<double> uniform_times(double t_max, int samples);

}  // namespace qlattice

#endif
