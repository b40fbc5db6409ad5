#ifndef QLATTICE_SPECTRAL_HPP
#define QLATTICE_SPECTRAL_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "qlattice/hamiltonian.hpp"
#include "qlattice/state.hpp"

namespace qlattice {

/// Full dense eigendecomposition. Eigenvalues ascending; eigenvectors are
/// orthonormal columns with the largest-magnitude entry of each column made
/// positive (deterministic sign).
struct SpectralDecomposition {
  FockBasis basis;
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXd eigenvectors;

  int size() const { return static_cast<int>(eigenvalues.size()); }
  QuantumState eigenstate(int k) const;
  /// Spectral norm, max |E_k|.
  double norm() const;
};

SpectralDecomposition diagonalize(const HamiltonianMatrix& h);

enum class LevelClass { Band, Localized, Crossover };
const char* to_string(LevelClass c);

struct LocalizedPair {
  int k = 0;                     ///< lower member; partner is k + 1
  int k_prime = 0;
  double center = 0.0;           ///< probability-weighted mean |j| of the pair
  double splitting = 0.0;        ///< E_{k'} - E_k
  double mean_energy = 0.0;      ///< (E_k + E_{k'}) / 2
  double predicted_energy = 0.0; ///< trap strength * center^2
};

struct BandClassification {
  std::vector<int> band_levels;  ///< E in [-band_edge, band_edge]
  int band_count = 0;
  int predicted_count = 0;
  std::vector<LocalizedPair> localized_pairs;
  std::vector<LevelClass> classes;  ///< one entry per level
  double band_edge = 0.0;           ///< 2J (one-boson) or 2|J2| (dimer)
  std::string warning;              ///< set when no level exceeds the band top
};

/// Splits a trapped one-boson or dimer spectrum into band levels, degenerate
/// localized doublets and crossover levels. Doublet detection: consecutive
/// levels above the band edge with splitting < 1e-6 J and matching centers;
/// borderline levels near the band edge are reported as crossover. For the
/// dimer sector the decomposition must come from the Hamiltonian without the
/// internal-energy offset.
BandClassification classify_spectrum(const SpectralDecomposition& dec,
                                     const SystemSpec& spec);

/// Harmonic approximation of the low band: -2J + 2 sqrt(J Omega) (k + 1/2),
/// with J -> |J2|, Omega -> 2 Omega in the dimer sector (energies relative
/// to the dimer internal energy).
double harmonic_energy(const SystemSpec& spec, int k, Sector sector);

/// Discrete Hermite-Gauss level-k profile: amplitude at site j proportional
/// to (2^k k!)^{-1/2} exp(-z^2/2) H_k(z) with z = j (Omega/J)^{1/4}
/// (one-boson) or z = j (Omega |U| / J^2)^{1/4} (dimer); the staggered
/// variant multiplies by (-1)^j and exists only in the dimer sector.
/// Evaluated by the normalized three-term recurrence; normalized on the
/// lattice.
QuantumState hermite_gauss_state(const SystemSpec& spec, int k, Sector sector,
                                 bool staggered = false);

struct FlatBlochMode {
  double energy;       ///< units of |J|
  QuantumState state;  ///< over the one-boson basis of n_sites sites
};

/// Analytic eigenpair k of the open flat chain of n_sites (odd) sites:
/// energy -2 cos(pi (k+1) / (n_sites+1)), amplitudes sin(l pi (k+1) /
/// (n_sites+1)). negative_J flips the dispersion sign; the ground state is
/// then k = n_sites - 1, whose amplitudes alternate in sign site to site.
FlatBlochMode flat_bloch(int n_sites, int k, bool negative_J = false);

/// +1 even, -1 odd under j -> -j, 0 when mixed (degenerate doublets).
int parity_of(const QuantumState& state);

/// CSV rows `k,energy,parity,class`.
void write_spectrum_csv(const SpectralDecomposition& dec,
                        const BandClassification& cls, std::ostream& os);

}  // namespace qlattice

#endif
