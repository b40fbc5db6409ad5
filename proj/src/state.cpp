#include "qlattice/state.hpp"

#include <ostream>
#include <stdexcept>

#include "qlattice/format.hpp"

namespace qlattice {

void QuantumState::normalize() {
  const double n = amplitudes.norm();
  if (n == 0.0) throw std::invalid_argument("normalize: zero state");
  amplitudes /= n;
}

std::complex<double> overlap(const QuantumState& bra, const QuantumState& ket) {
  if (!bra.basis.compatible(ket.basis))
    throw std::invalid_argument("overlap: basis mismatch");
  return bra.amplitudes.dot(ket.amplitudes);  // conjugates the bra
}

void write_state_csv(const QuantumState& state, std::ostream& os) {
  os << "index,description,re,im\n";
  for (int n = 0; n < state.basis.size(); ++n) {
    os << n << ',' << state.basis.label(n) << ','
       << g17(state.amplitudes[n].real()) << ','
       << g17(state.amplitudes[n].imag()) << '\n';
  }
}

}  // namespace qlattice
