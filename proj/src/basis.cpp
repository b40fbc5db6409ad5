#include "qlattice/basis.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qlattice {

FockBasis::FockBasis(Sector sector, int half_width)
    : sector_(sector), M_(half_width) {
  if (half_width < 0)
    throw std::invalid_argument("FockBasis: half_width must be >= 0");
}

int FockBasis::size() const {
  const int L = num_sites();
  return sector_ == Sector::TwoBoson ? L * (L + 1) / 2 : L;
}

void FockBasis::require(Sector s, const char* what) const {
  if (sector_ != s)
    throw std::logic_error(std::string(what) + ": wrong sector (" +
                           to_string(sector_) + ")");
}

int FockBasis::site_index(int j) const {
  if (sector_ == Sector::TwoBoson)
    throw std::logic_error("site_index: wrong sector (two-boson)");
  if (j < -M_ || j > M_) throw std::out_of_range("site_index: site outside lattice");
  return j + M_;
}

int FockBasis::site_at(int index) const {
  if (sector_ == Sector::TwoBoson)
    throw std::logic_error("site_at: wrong sector (two-boson)");
  if (index < 0 || index >= size()) throw std::out_of_range("site_at: bad index");
  return index - M_;
}

int FockBasis::num_pairs() const {
  require(Sector::TwoBoson, "num_pairs");
  const int L = num_sites();
  return L * (L - 1) / 2;
}

int FockBasis::pair_index(int i, int j) const {
  require(Sector::TwoBoson, "pair_index");
  if (i >= j) throw std::invalid_argument("pair_index: requires i < j");
  if (i < -M_ || j > M_) throw std::out_of_range("pair_index: site outside lattice");
  const int L = num_sites();
  const int a = i + M_, b = j + M_;
  // pairs (x,y), x<y, lexicographic; a rows of decreasing length precede row a
  return a * (2 * L - a - 1) / 2 + (b - a - 1);
}

int FockBasis::double_index(int j) const {
  require(Sector::TwoBoson, "double_index");
  if (j < -M_ || j > M_) throw std::out_of_range("double_index: site outside lattice");
  return num_pairs() + (j + M_);
}

bool FockBasis::is_double(int index) const {
  require(Sector::TwoBoson, "is_double");
  if (index < 0 || index >= size()) throw std::out_of_range("is_double: bad index");
  return index >= num_pairs();
}

std::array<int, 2> FockBasis::sites_at(int index) const {
  require(Sector::TwoBoson, "sites_at");
  if (index < 0 || index >= size()) throw std::out_of_range("sites_at: bad index");
  const int L = num_sites();
  const int P = num_pairs();
  if (index >= P) {
    const int j = index - P - M_;
    return {j, j};
  }
  // invert the row-offset formula; the fix-up loop corrects rounding
  int a = static_cast<int>(L - 0.5 - std::sqrt((L - 0.5) * (L - 0.5) - 2.0 * index));
  if (a < 0) a = 0;
  while (a * (2 * L - a - 1) / 2 > index) --a;
  while ((a + 1) * (2 * L - a - 2) / 2 <= index) ++a;
  const int row_start = a * (2 * L - a - 1) / 2;
  const int b = a + 1 + (index - row_start);
  return {a - M_, b - M_};
}

std::string FockBasis::label(int index) const {
  switch (sector_) {
    case Sector::OneBoson:
      return "1_" + std::to_string(site_at(index));
    case Sector::Dimer:
      return "1D_" + std::to_string(site_at(index));
    case Sector::TwoBoson: {
      const auto s = sites_at(index);
      if (s[0] == s[1]) return "2_" + std::to_string(s[0]);
      return "1_" + std::to_string(s[0]) + " 1_" + std::to_string(s[1]);
    }
  }
  return "?";
}

FockBasis build_basis(const SystemSpec& spec, Sector sector) {
  spec.validate();
  return FockBasis(sector, spec.M);
}

}  // namespace qlattice
