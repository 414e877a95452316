#pragma once

#include <cstddef>
#include <vector>

#include "mero/funcrep.hpp"

namespace mero {

/// Fast evaluation of lambda -> ||f + lambda g|| for a fixed pair.
///
/// Boundary values of both components are tabulated once; each query takes
/// the grid maximum of |a + lambda b| and refines the highest grid peaks by
/// golden-section search on the exact functions.
class PencilNorm {
 public:
  /// Keeps references to f and g; both must outlive the pencil.
  PencilNorm(const MeroFunction& f, const MeroFunction& g, std::size_t grid = 1024);

  /// Grid-only value; a lower bound for the refined one.
  double estimate(cd lambda) const;
  /// Refined ||f + lambda g||.
  double operator()(cd lambda) const;
  /// Refined ||g||.
  double norm_direction() const;

 private:
  struct Side {
    std::vector<cd> a;  // f component on the grid
    std::vector<cd> b;  // g component on the grid
    bool q = true;
  };
  double side_sup(const Side& s, cd mu, cd lambda, bool refine) const;
  cd component(bool q, const MeroFunction& h, double theta) const;

  const MeroFunction& f_;
  const MeroFunction& g_;
  std::size_t grid_;
  Side q_;
  Side r_;
};

}  // namespace mero
