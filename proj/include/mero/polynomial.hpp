#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace mero {

using cd = std::complex<double>;

/// Dense complex polynomial, coefficients in ascending degree.
///
/// Exact zero high-order coefficients are trimmed on construction, so the
/// zero polynomial is the empty coefficient list and degree() == -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<cd> coeffs);
  Polynomial(std::initializer_list<cd> coeffs);

  static Polynomial constant(cd c);
  /// c * z^degree
  static Polynomial monomial(cd c, std::size_t degree);
  /// leading * prod (z - root)
  static Polynomial from_roots(std::span<const cd> roots, cd leading = 1.0);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  const std::vector<cd>& coeffs() const noexcept { return coeffs_; }
  /// Coefficient of z^i; zero beyond the stored degree.
  cd operator[](std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : cd{}; }
  cd leading() const noexcept { return coeffs_.empty() ? cd{} : coeffs_.back(); }
  /// Largest coefficient modulus (0 for the zero polynomial).
  double max_abs_coeff() const noexcept;

  /// Horner evaluation.
  cd operator()(cd z) const noexcept;
  Polynomial derivative(unsigned order = 1) const;
  /// p(z + shift)
  Polynomial taylor_shift(cd shift) const;
  Polynomial pow(unsigned n) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(cd scale);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(Polynomial lhs, cd scale) { return lhs *= scale; }
  friend Polynomial operator*(cd scale, Polynomial rhs) { return rhs *= scale; }
  friend Polynomial operator-(Polynomial p) { return p *= -1.0; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  struct DivMod;
  /// Long division; throws IllPosedError on a zero divisor.
  static DivMod divmod(const Polynomial& num, const Polynomial& den);

 private:
  void trim();
  std::vector<cd> coeffs_;
};

struct Polynomial::DivMod {
  Polynomial quotient;
  Polynomial remainder;
};

}  // namespace mero
