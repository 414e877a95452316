#pragma once

#include <vector>

#include "mero/polynomial.hpp"

namespace mero {

struct Root {
  cd value;
  unsigned multiplicity = 1;
};

/// Roots grouped by multiplicity.
///
/// Exact zero low-order coefficients give a root at 0 directly. The rest come
/// from companion-matrix eigenvalues with one Newton step each; eigenvalues
/// within 1e-7 * (1 + |root|) of each other are merged into one root whose
/// multiplicity is the cluster size, and the cluster mean is then polished by
/// one Newton step on the (m-1)-th derivative.
std::vector<Root> find_roots(const Polynomial& p);

/// Relative merge radius used by find_roots.
inline constexpr double kRootClusterTol = 1e-7;

}  // namespace mero
