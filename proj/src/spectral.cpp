#include "qlattice/spectral.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "qlattice/format.hpp"

namespace qlattice {

QuantumState SpectralDecomposition::eigenstate(int k) const {
  if (k < 0 || k >= size())
    throw std::out_of_range("eigenstate: level index out of range");
  QuantumState s{basis, eigenvectors.col(k).cast<std::complex<double>>()};
  return s;
}

double SpectralDecomposition::norm() const {
  if (eigenvalues.size() == 0) return 0.0;
  return std::max(std::abs(eigenvalues[0]),
                  std::abs(eigenvalues[eigenvalues.size() - 1]));
}

SpectralDecomposition diagonalize(const HamiltonianMatrix& h) {
  Eigen::MatrixXd dense(h.matrix);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(dense);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("diagonalize: eigensolver failed on a " +
                             std::to_string(dense.rows()) + "x" +
                             std::to_string(dense.cols()) + " matrix");
  SpectralDecomposition dec{h.basis, solver.eigenvalues(), solver.eigenvectors()};
  // sign convention: largest-magnitude entry of each column positive
  for (int k = 0; k < dec.eigenvectors.cols(); ++k) {
    int imax = 0;
    double vmax = 0.0;
    for (int i = 0; i < dec.eigenvectors.rows(); ++i) {
      const double a = std::abs(dec.eigenvectors(i, k));
      if (a > vmax) {
        vmax = a;
        imax = i;
      }
    }
    if (dec.eigenvectors(imax, k) < 0.0) dec.eigenvectors.col(k) = -dec.eigenvectors.col(k);
  }
  return dec;
}

const char* to_string(LevelClass c) {
  switch (c) {
    case LevelClass::Band: return "band";
    case LevelClass::Localized: return "localized";
    case LevelClass::Crossover: return "crossover";
  }
  return "?";
}

namespace {

// probability-weighted mean |j| of an eigenvector column
double mean_abs_site(const Eigen::MatrixXd& vecs, int k, int M) {
  double c = 0.0;
  for (int i = 0; i < vecs.rows(); ++i) {
    const double w = vecs(i, k) * vecs(i, k);
    c += w * std::abs(i - M);
  }
  return c;
}

}  // namespace

BandClassification classify_spectrum(const SpectralDecomposition& dec,
                                     const SystemSpec& spec) {
  const Sector sector = dec.basis.sector();
  if (sector == Sector::TwoBoson)
    throw std::invalid_argument(
        "classify_spectrum: defined for one-boson and dimer decompositions");
  const bool dimer = sector == Sector::Dimer;
  const double band_coupling = dimer ? std::abs(spec.dimer_tunneling()) : spec.J;
  const double trap = dimer ? spec.dimer_trap() : spec.Omega;
  const int M = dec.basis.half_width();
  const int n = dec.size();

  BandClassification cls;
  cls.band_edge = 2.0 * band_coupling;
  cls.predicted_count =
      spec.Omega > 0.0 ? predicted_band_count(spec, sector) : dec.basis.num_sites();
  cls.classes.assign(n, LevelClass::Crossover);

  int first_above = n;
  for (int k = 0; k < n; ++k) {
    if (dec.eigenvalues[k] >= -cls.band_edge && dec.eigenvalues[k] <= cls.band_edge) {
      cls.band_levels.push_back(k);
      cls.classes[k] = LevelClass::Band;
    }
    if (dec.eigenvalues[k] <= cls.band_edge) first_above = k + 1;
  }
  cls.band_count = static_cast<int>(cls.band_levels.size());

  if (first_above >= n && spec.Omega > 0.0)
    cls.warning = "no level exceeds the band top; lattice too small to host "
                  "localized states (increase M)";

  const double split_tol = 1e-6 * spec.J;
  for (int k = first_above; k + 1 < n;) {
    const double split = dec.eigenvalues[k + 1] - dec.eigenvalues[k];
    const double c1 = mean_abs_site(dec.eigenvectors, k, M);
    const double c2 = mean_abs_site(dec.eigenvectors, k + 1, M);
    if (split < split_tol && std::abs(c1 - c2) <= 1.0) {
      LocalizedPair p;
      p.k = k;
      p.k_prime = k + 1;
      p.center = 0.5 * (c1 + c2);
      p.splitting = split;
      p.mean_energy = 0.5 * (dec.eigenvalues[k] + dec.eigenvalues[k + 1]);
      p.predicted_energy = trap * p.center * p.center;
      cls.localized_pairs.push_back(p);
      cls.classes[k] = cls.classes[k + 1] = LevelClass::Localized;
      k += 2;
    } else {
      k += 1;  // borderline level, stays crossover
    }
  }
  return cls;
}

double harmonic_energy(const SystemSpec& spec, int k, Sector sector) {
  if (k < 0) throw std::invalid_argument("harmonic_energy: k must be >= 0");
  double coupling = 0.0, trap = 0.0;
  switch (sector) {
    case Sector::OneBoson:
      coupling = spec.J;
      trap = spec.Omega;
      break;
    case Sector::Dimer:
      coupling = std::abs(spec.dimer_tunneling());
      trap = spec.dimer_trap();
      break;
    case Sector::TwoBoson:
      throw std::invalid_argument("harmonic_energy: one-boson or dimer sector");
  }
  return -2.0 * coupling + 2.0 * std::sqrt(coupling * trap) * (k + 0.5);
}

QuantumState hermite_gauss_state(const SystemSpec& spec, int k, Sector sector,
                                 bool staggered) {
  spec.validate();
  if (k < 0) throw std::invalid_argument("hermite_gauss_state: k must be >= 0");
  if (!(spec.Omega > 0.0))
    throw std::invalid_argument("hermite_gauss_state: requires Omega > 0");
  double scale = 0.0;
  switch (sector) {
    case Sector::OneBoson:
      if (staggered)
        throw std::invalid_argument(
            "hermite_gauss_state: staggered profile exists only in the dimer sector");
      scale = std::pow(spec.Omega / spec.J, 0.25);
      break;
    case Sector::Dimer:
      if (spec.U == 0.0)
        throw std::invalid_argument("hermite_gauss_state: dimer sector needs U != 0");
      scale = std::pow(spec.Omega * std::abs(spec.U) / (spec.J * spec.J), 0.25);
      break;
    case Sector::TwoBoson:
      throw std::invalid_argument("hermite_gauss_state: one-boson or dimer sector");
  }

  FockBasis basis = build_basis(spec, sector);
  Eigen::VectorXcd amp(basis.size());
  for (int j = -spec.M; j <= spec.M; ++j) {
    const double z = j * scale;
    // h~_k(z) = (2^k k!)^{-1/2} H_k(z), by the normalized recurrence
    double hm = 0.0, h = 1.0;
    for (int m = 0; m < k; ++m) {
      const double hn = z * std::sqrt(2.0 / (m + 1)) * h - std::sqrt(double(m) / (m + 1)) * hm;
      hm = h;
      h = hn;
    }
    double a = std::exp(-0.5 * z * z) * h;
    if (staggered && (j & 1)) a = -a;
    amp[basis.site_index(j)] = a;
  }
  QuantumState s{std::move(basis), std::move(amp)};
  s.normalize();
  return s;
}

FlatBlochMode flat_bloch(int n_sites, int k, bool negative_J) {
  if (n_sites < 1 || n_sites % 2 == 0)
    throw std::invalid_argument("flat_bloch: n_sites must be odd and >= 1");
  // odd n_sites maps onto the one-boson basis with M = (n_sites - 1) / 2
  if (k < 0 || k >= n_sites)
    throw std::out_of_range("flat_bloch: level index out of range");
  const double theta = std::numbers::pi * (k + 1) / (n_sites + 1);
  const double energy = (negative_J ? 2.0 : -2.0) * std::cos(theta);
  FockBasis basis(Sector::OneBoson, (n_sites - 1) / 2);
  Eigen::VectorXcd amp(n_sites);
  int imax = 0;
  double vmax = 0.0;
  for (int l = 1; l <= n_sites; ++l) {
    const double a = std::sin(l * theta);
    amp[l - 1] = a;
    if (std::abs(a) > vmax) {
      vmax = std::abs(a);
      imax = l - 1;
    }
  }
  if (amp[imax].real() < 0.0) amp = -amp;
  QuantumState s{std::move(basis), std::move(amp)};
  s.normalize();
  return {energy, std::move(s)};
}

int parity_of(const QuantumState& state) {
  if (state.basis.sector() == Sector::TwoBoson)
    throw std::invalid_argument("parity_of: one-boson or dimer sector");
  const int L = state.basis.num_sites();
  std::complex<double> s = 0.0;
  for (int i = 0; i < L; ++i)
    s += std::conj(state.amplitudes[L - 1 - i]) * state.amplitudes[i];
  const double r = s.real();
  if (r > 0.9) return 1;
  if (r < -0.9) return -1;
  return 0;
}

void write_spectrum_csv(const SpectralDecomposition& dec,
                        const BandClassification& cls, std::ostream& os) {
  os << "k,energy,parity,class\n";
  for (int k = 0; k < dec.size(); ++k) {
    os << k << ',' << g17(dec.eigenvalues[k]) << ','
       << parity_of(dec.eigenstate(k)) << ',' << to_string(cls.classes[k])
       << '\n';
  }
}

}  // namespace qlattice
