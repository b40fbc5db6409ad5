#ifndef QLATTICE_BASIS_HPP
#define QLATTICE_BASIS_HPP

#include <array>
#include <string>

#include "qlattice/system.hpp"

namespace qlattice {

/// Ordered Fock basis over sites j = -M..M.
///
///   one-boson:  |1_j>, j ascending                          dim L = 2M+1
///   two-boson:  |1_i 1_j> with i < j, (i,j) lexicographic,
///               then |2_j>, j ascending                     dim L(L+1)/2
///   dimer:      |1D_j>, j ascending                         dim L
///
/// The ordering is fixed: state vectors and exported files index against it.
class FockBasis {
 public:
  FockBasis(Sector sector, int half_width);

  Sector sector() const { return sector_; }
  int half_width() const { return M_; }
  int num_sites() const { return 2 * M_ + 1; }
  int size() const;

  bool compatible(const FockBasis& other) const {
    return sector_ == other.sector_ && M_ == other.M_;
  }

  // one-boson / dimer sectors
  int site_index(int j) const;
  int site_at(int index) const;

  // two-boson sector
  int num_pairs() const;               ///< offset of the |2_j> block
  int pair_index(int i, int j) const;  ///< requires i < j
  int double_index(int j) const;
  bool is_double(int index) const;
  /// Occupied sites: (i, j), i < j for pair states, (j, j) for |2_j>.
  std::array<int, 2> sites_at(int index) const;

  /// Occupation pattern, e.g. "1_-3 1_5", "2_0", "1_7", "1D_4".
  std::string label(int index) const;

 private:
  void require(Sector s, const char* what) const;

  Sector sector_;
  int M_;
};

FockBasis build_basis(const SystemSpec& spec, Sector sector);

}  // namespace qlattice

#endif
