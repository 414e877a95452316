#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "mero/expr.hpp"
#include "mero/polynomial.hpp"

namespace mero {

/// Closed disk {|z - center| <= radius}; its boundary circle is the curve on
/// which all suprema are taken.
class Disk {
 public:
  /// Throws IllPosedError unless radius > 0 and everything is finite.
  Disk(cd center, double radius);

  cd center() const noexcept { return center_; }
  double radius() const noexcept { return radius_; }
  cd boundary_point(double theta) const { return center_ + radius_ * std::polar(1.0, theta); }
  /// Signed distance to the boundary circle; positive inside.
  double depth(cd z) const { return radius_ - std::abs(z - center_); }

  friend bool operator==(const Disk&, const Disk&) = default;

 private:
  cd center_;
  double radius_;
};

/// sum_{j=1..n} coeffs[j-1] / (z - pole)^j
struct PrincipalPart {
  cd pole;
  std::vector<cd> coeffs;

  unsigned order() const noexcept { return static_cast<unsigned>(coeffs.size()); }
  cd operator()(cd z) const;
  cd derivative(cd z) const;
  /// The mirrored polynomial sum_j coeffs[j-1] * (z - pole)^j.
  Polynomial mirrored() const;
  double max_abs_coeff() const;

  friend bool operator==(const PrincipalPart&, const PrincipalPart&) = default;
};

/// Perturbation scalar of a Birkhoff-James test together with the two ray
/// parameters that appear when the orthogonality characterization is
/// proved. Only lambda is used by any computation.
struct ScalarPair {
  cd lambda;
  double mu = 0.0;
  double sigma = 0.0;
};

/// weight * (expr(z) - sum_k subtracted[k](z)); analytic on the disk when the
/// subtracted parts are exactly the principal parts of expr there.
struct ExprTerm {
  cd weight;
  Expr expr;
  std::vector<PrincipalPart> subtracted;
};

/// Analytic part f_R of a meromorphic function:
/// polynomial + principal parts of poles outside the disk + expression terms.
struct Remainder {
  Polynomial polynomial;
  std::vector<PrincipalPart> outer;
  std::vector<ExprTerm> terms;

  cd operator()(cd z) const;
  /// Exact for the polynomial and pole pieces; expression terms are
  /// differentiated with a 16-point Cauchy integral of radius `step`.
  cd derivative(cd z, double step) const;
  bool is_polynomial() const noexcept { return outer.empty() && terms.empty(); }
  bool is_structurally_zero() const noexcept { return polynomial.is_zero() && is_polynomial(); }
};

/// Where the contour extraction of one declared pole converged.
struct ContourInfo {
  cd pole;
  double radius;
  std::size_t nodes;
};

/// A meromorphic function on a closed disk, stored as f = f_P + f_R with the
/// principal part f_P given by its poles inside the disk.
///
/// Immutable; all accessors are const and safe to call concurrently.
class MeroFunction {
 public:
  /// Validates that every part has a pole strictly inside the disk with a
  /// nonzero leading coefficient, poles are pairwise distinct and outer
  /// parts lie strictly outside.
  MeroFunction(Disk disk, std::vector<PrincipalPart> parts, Remainder remainder,
               std::vector<ContourInfo> contour = {});

  static MeroFunction zero(const Disk& disk);

  const Disk& disk() const noexcept { return disk_; }
  const std::vector<PrincipalPart>& parts() const noexcept { return parts_; }
  const Remainder& remainder() const noexcept { return remainder_; }
  const std::vector<ContourInfo>& contour() const noexcept { return contour_; }

  /// f_Q as an expanded polynomial.
  const Polynomial& q_polynomial() const noexcept { return q_; }

  cd principal(cd z) const;  // f_P
  cd analytic(cd z) const { return remainder_(z); }  // f_R
  cd q(cd z) const { return q_(z); }  // f_Q
  cd operator()(cd z) const { return principal(z) + analytic(z); }

  bool is_zero() const noexcept { return parts_.empty() && remainder_.is_structurally_zero(); }

 private:
  Disk disk_;
  std::vector<PrincipalPart> parts_;
  Remainder remainder_;
  std::vector<ContourInfo> contour_;
  Polynomial q_;
};

struct DeclaredPole {
  cd location;
  unsigned max_order = 1;
};

struct ContourOptions {
  std::size_t initial_nodes = 256;
  std::size_t max_nodes = 2048;
  double convergence_tol = 1e-8;
};

/// Exact partial fractions of num/den. Poles inside the disk become f_P; the
/// polynomial quotient and the poles outside form f_R.
///
/// Throws IllPosedError for a zero denominator or a pole within 1e-8 * r of
/// the boundary circle.
MeroFunction from_rational(const Polynomial& num, const Polynomial& den, const Disk& disk);

/// Laurent coefficients at the declared poles by trapezoid quadrature on
/// circles, with f_R = e - f_P evaluated lazily.
///
/// Throws IllPosedError for badly placed poles or a spurious pole,
/// QuadratureError when doubling the node count stops agreeing.
MeroFunction from_expr_with_poles(const Expr& e, std::span<const DeclaredPole> poles, const Disk& disk,
                                  const ContourOptions& options = {});

/// Input without declared poles: rational expressions go through
/// from_rational; otherwise the rational summands are decomposed exactly and
/// the remaining summands are taken as analytic on the disk.
MeroFunction from_expr(const Expr& e, const Disk& disk);

Polynomial q_polynomial(const MeroFunction& f);

/// f + lambda * g. Poles closer than 1e-9 * (1 + |p|) are merged; trailing
/// coefficients below 1e-10 * (1 + contributing magnitude) are pruned.
MeroFunction linear_combine(const MeroFunction& f, const MeroFunction& g, cd lambda);

/// Expression text for f (principal parts + remainder) and, when f carries
/// expression terms with subtracted poles, the poles to declare with it.
struct FunctionText {
  std::string expr;
  std::vector<DeclaredPole> poles;
};
FunctionText to_text(const MeroFunction& f);

inline constexpr double kPoleBoundaryTol = 1e-8;
inline constexpr double kCoefZeroTol = 1e-10;
inline constexpr double kPoleMergeTol = 1e-9;

}  // namespace mero
