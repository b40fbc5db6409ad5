#include "qlattice/wavepacket.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qlattice {

namespace {
constexpr double kBoundaryWeightTol = 1e-8;
}

QuantumState shifted_ground_state(const SystemSpec& spec, int shift,
                                  Sector sector, bool staggered) {
  QuantumState base = hermite_gauss_state(spec, 0, sector, staggered);
  const int M = spec.M;
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(base.amplitudes.size());
  double kept = 0.0;
  for (int j = -M; j <= M; ++j) {
    const int src = j - shift;
    if (src < -M || src > M) continue;
    out[j + M] = base.amplitudes[src + M];
    kept += std::norm(out[j + M]);
  }
  const double dropped = 1.0 - kept;
  const double edge = std::max(std::norm(out[0]), std::norm(out[2 * M]));
  if (dropped > kBoundaryWeightTol || edge > kBoundaryWeightTol)
    throw std::invalid_argument(
        "shifted_ground_state: shift " + std::to_string(shift) +
        " pushes significant weight onto the boundary (enlarge M)");
  QuantumState s{base.basis, std::move(out)};
  s.normalize();
  return s;
}

QuantumState localized_packet(const SpectralDecomposition& dec,
                              const SystemSpec& spec, int target_site,
                              int levels) {
  if (dec.basis.sector() != Sector::OneBoson)
    throw std::invalid_argument("localized_packet: one-boson decomposition required");
  if (std::abs(target_site) > dec.basis.half_width())
    throw std::out_of_range("localized_packet: target site outside lattice");
  if (std::abs(target_site) >= j_max(spec, Sector::OneBoson))
    throw std::invalid_argument(
        "localized_packet: target site outside the band-supporting region");
  int band_levels = 0;
  for (int k = 0; k < dec.size(); ++k)
    if (dec.eigenvalues[k] >= -2.0 * spec.J && dec.eigenvalues[k] <= 2.0 * spec.J)
      ++band_levels;
  if (levels < 1 || levels > band_levels)
    throw std::invalid_argument("localized_packet: levels must be in 1.." +
                                std::to_string(band_levels));

  // Cauchy-Schwarz maximizer of |<1_target|psi>|^2 at fixed coefficient norm
  const int row = dec.basis.site_index(target_site);
  Eigen::VectorXd coeff = dec.eigenvectors.row(row).head(levels).transpose();
  coeff.normalize();
  QuantumState s{dec.basis,
                 (dec.eigenvectors.leftCols(levels) * coeff)
                     .cast<std::complex<double>>()};
  s.normalize();
  return s;
}

QuantumState localized_packet(const SystemSpec& spec, int target_site,
                              int levels) {
  return localized_packet(diagonalize(build_single_hamiltonian(spec)), spec,
                          target_site, levels);
}

QuantumState symmetrized_product(const QuantumState& psi1,
                                 const QuantumState& psi2) {
  if (psi1.basis.sector() != Sector::OneBoson ||
      psi2.basis.sector() != Sector::OneBoson || !psi1.basis.compatible(psi2.basis))
    throw std::invalid_argument(
        "symmetrized_product: two one-boson states over the same lattice required");
  const int M = psi1.basis.half_width();
  FockBasis basis(Sector::TwoBoson, M);
  Eigen::VectorXcd amp(basis.size());
  const auto& a = psi1.amplitudes;
  const auto& b = psi2.amplitudes;
  int n = 0;
  for (int i = 0; i < 2 * M + 1; ++i)
    for (int j = i + 1; j < 2 * M + 1; ++j) amp[n++] = a[i] * b[j] + a[j] * b[i];
  for (int j = 0; j < 2 * M + 1; ++j) amp[n++] = std::sqrt(2.0) * a[j] * b[j];
  QuantumState s{std::move(basis), std::move(amp)};
  s.normalize();
  return s;
}

QuantumState lift_dimer_state(const QuantumState& dimer_state) {
  if (dimer_state.basis.sector() != Sector::Dimer)
    throw std::invalid_argument("lift_dimer_state: dimer-sector state required");
  const int M = dimer_state.basis.half_width();
  FockBasis basis(Sector::TwoBoson, M);
  Eigen::VectorXcd amp = Eigen::VectorXcd::Zero(basis.size());
  amp.tail(2 * M + 1) = dimer_state.amplitudes;
  return {std::move(basis), std::move(amp)};
}

}  // namespace qlattice
