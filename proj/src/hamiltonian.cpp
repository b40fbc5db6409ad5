#include "qlattice/hamiltonian.hpp"

#include <cmath>
#include <ostream>
#include <vector>

#include "qlattice/format.hpp"

namespace qlattice {

namespace {

using Triplet = Eigen::Triplet<double>;

HamiltonianMatrix assemble(FockBasis basis, const std::vector<Triplet>& entries) {
  Eigen::SparseMatrix<double> m(basis.size(), basis.size());
  m.setFromTriplets(entries.begin(), entries.end());
  m.makeCompressed();
  return {std::move(basis), std::move(m)};
}

void add_symmetric(std::vector<Triplet>& t, int a, int b, double v) {
  t.emplace_back(a, b, v);
  t.emplace_back(b, a, v);
}

}  // namespace

HamiltonianMatrix build_single_hamiltonian(const SystemSpec& spec) {
  FockBasis basis = build_basis(spec, Sector::OneBoson);
  std::vector<Triplet> t;
  t.reserve(3 * basis.size());
  for (int j = -spec.M; j <= spec.M; ++j) {
    const int a = basis.site_index(j);
    t.emplace_back(a, a, spec.Omega * j * j);
    if (j < spec.M) add_symmetric(t, a, basis.site_index(j + 1), -spec.J);
  }
  return assemble(std::move(basis), t);
}

HamiltonianMatrix build_two_boson_hamiltonian(const SystemSpec& spec) {
  FockBasis basis = build_basis(spec, Sector::TwoBoson);
  const int M = spec.M;
  const double rt2J = std::sqrt(2.0) * spec.J;
  std::vector<Triplet> t;
  t.reserve(5 * basis.size());

  // pair states |1_i 1_j>, i < j
  for (int i = -M; i <= M; ++i) {
    for (int j = i + 1; j <= M; ++j) {
      const int a = basis.pair_index(i, j);
      t.emplace_back(a, a, spec.Omega * (double(i) * i + double(j) * j));
      // rightward moves plus both merges; leftward moves onto other pair
      // states are the transposes of rightward moves from those states
      if (j + 1 <= M)
        add_symmetric(t, a, basis.pair_index(i, j + 1), -spec.J);
      if (i + 1 == j) {
        add_symmetric(t, a, basis.double_index(j), -rt2J);  // i hops onto j
        add_symmetric(t, a, basis.double_index(i), -rt2J);  // j hops onto i
      } else {
        add_symmetric(t, a, basis.pair_index(i + 1, j), -spec.J);
      }
    }
  }
  // doubly occupied states |2_j>; their hopping entries were added above
  for (int j = -M; j <= M; ++j) {
    const int a = basis.double_index(j);
    t.emplace_back(a, a, 2.0 * spec.Omega * double(j) * j + spec.U);
  }
  return assemble(std::move(basis), t);
}

HamiltonianMatrix build_dimer_hamiltonian(const SystemSpec& spec,
                                          bool include_internal_energy) {
  const double J2 = spec.dimer_tunneling();
  const double trap = spec.dimer_trap();
  const double onsite = include_internal_energy ? spec.dimer_internal_energy() : 0.0;
  FockBasis basis = build_basis(spec, Sector::Dimer);
  std::vector<Triplet> t;
  t.reserve(3 * basis.size());
  for (int j = -spec.M; j <= spec.M; ++j) {
    const int a = basis.site_index(j);
    t.emplace_back(a, a, trap * j * j + onsite);
    if (j < spec.M) add_symmetric(t, a, basis.site_index(j + 1), -J2);
  }
  return assemble(std::move(basis), t);
}

void write_coordinate_text(const HamiltonianMatrix& h, std::ostream& os) {
  for (int col = 0; col < h.matrix.outerSize(); ++col) {
    for (Eigen::SparseMatrix<double>::InnerIterator it(h.matrix, col); it; ++it) {
      os << it.row() << ' ' << it.col() << ' ' << g17(it.value()) << '\n';
    }
  }
}

}  // namespace qlattice
