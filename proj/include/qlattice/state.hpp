#ifndef QLATTICE_STATE_HPP
#define QLATTICE_STATE_HPP

#include <Eigen/Dense>
#include <complex>
#include <iosfwd>

#include "qlattice/basis.hpp"

namespace qlattice {

/// Complex amplitude vector over a FockBasis. All state constructors in this
/// library emit unit-norm amplitudes.
struct QuantumState {
  FockBasis basis;
  Eigen::VectorXcd amplitudes;

  double norm() const { return amplitudes.norm(); }
  void normalize();
};

/// <bra|ket>; the bases must agree.
std::complex<double> overlap(const QuantumState& bra, const QuantumState& ket);

/// CSV rows `index,description,re,im`, 17 significant digits.
void write_state_csv(const QuantumState& state, std::ostream& os);

}  // namespace qlattice

#endif
