#ifndef QLATTICE_FORMAT_HPP
#define QLATTICE_FORMAT_HPP

#include <cstdio>
#include <string>

namespace qlattice {

/// Shortest-faithful decimal form used by every exporter (printf %.17g).
inline std::string g17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace qlattice

#endif
