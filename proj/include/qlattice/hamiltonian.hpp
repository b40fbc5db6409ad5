#ifndef QLATTICE_HAMILTONIAN_HPP
#define QLATTICE_HAMILTONIAN_HPP

#include <Eigen/Sparse>
#include <iosfwd>

#include "qlattice/basis.hpp"

namespace qlattice {

/// Real symmetric sparse matrix over a FockBasis (full symmetric storage,
/// at most 5 nonzeros per row).
struct HamiltonianMatrix {
  FockBasis basis;
  Eigen::SparseMatrix<double> matrix;
};

/// One boson: diagonal Omega j^2, hopping -J between neighbours, open ends.
HamiltonianMatrix build_single_hamiltonian(const SystemSpec& spec);

/// Two bosons in the symmetrized basis. Diagonal Omega (i^2 + j^2) for
/// |1_i 1_j>, 2 Omega j^2 + U for |2_j>. Hopping -J between pair states,
/// -sqrt(2) J between |2_j> and |1_j 1_{j+-1}> (bosonic enhancement).
HamiltonianMatrix build_two_boson_hamiltonian(const SystemSpec& spec);

/// Effective single-dimer model: diagonal 2 Omega j^2 (optionally plus the
/// internal energy U - J2), hopping -J2 with J2 = -2 J^2 / U. Rejects U = 0.
HamiltonianMatrix build_dimer_hamiltonian(const SystemSpec& spec,
                                          bool include_internal_energy = false);

/// Debug export: one `row col value` line per stored nonzero.
void write_coordinate_text(const HamiltonianMatrix& h, std::ostream& os);

}  // namespace qlattice

#endif
