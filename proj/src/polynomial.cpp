#include "mero/polynomial.hpp"

#include <algorithm>

#include "mero/error.hpp"

namespace mero {

Polynomial::Polynomial(std::vector<cd> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<cd> coeffs) : coeffs_(coeffs) { trim(); }

Polynomial Polynomial::constant(cd c) { return Polynomial(std::vector<cd>{c}); }

Polynomial Polynomial::monomial(cd c, std::size_t degree) {
  std::vector<cd> v(degree + 1);
  v[degree] = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::from_roots(std::span<const cd> roots, cd leading) {
  std::vector<cd> v{leading};
  for (cd r : roots) {
    v.push_back(0.0);
    for (std::size_t k = v.size() - 1; k > 0; --k) v[k] = v[k - 1] - r * v[k];
    v[0] *= -r;
  }
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == cd{}) coeffs_.pop_back();
}

double Polynomial::max_abs_coeff() const noexcept {
  double m = 0.0;
  for (cd c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

cd Polynomial::operator()(cd z) const noexcept {
  cd acc{};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Polynomial Polynomial::derivative(unsigned order) const {
  std::vector<cd> v = coeffs_;
  for (unsigned o = 0; o < order && !v.empty(); ++o) {
    for (std::size_t k = 1; k < v.size(); ++k) v[k - 1] = v[k] * static_cast<double>(k);
    v.pop_back();
  }
  return Polynomial(std::move(v));
}

Polynomial Polynomial::taylor_shift(cd shift) const {
  // Repeated synthetic division by (z - shift).
  std::vector<cd> v = coeffs_;
  const std::size_t n = v.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t k = n - 1; k > i; --k) v[k - 1] += shift * v[k];
  return Polynomial(std::move(v));
}

Polynomial Polynomial::pow(unsigned n) const {
  Polynomial result = constant(1.0);
  Polynomial base = *this;
  while (n > 0) {
    if (n & 1u) result = result * base;
    n >>= 1u;
    if (n > 0) base = base * base;
  }
  return result;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(cd scale) {
  for (cd& c : coeffs_) c *= scale;
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<cd> v(lhs.size() + rhs.size() - 1);
  for (std::size_t i = 0; i < lhs.size(); ++i)
    for (std::size_t j = 0; j < rhs.size(); ++j) v[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  return Polynomial(std::move(v));
}

Polynomial::DivMod Polynomial::divmod(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw IllPosedError("polynomial division by the zero polynomial");
  if (num.degree() < den.degree()) return {Polynomial{}, num};
  std::vector<cd> rem = num.coeffs_;
  const std::size_t dn = den.size();
  std::vector<cd> quot(rem.size() - dn + 1);
  const cd lead = den.leading();
  for (std::size_t k = quot.size(); k-- > 0;) {
    const cd q = rem[k + dn - 1] / lead;
    quot[k] = q;
    for (std::size_t j = 0; j < dn; ++j) rem[k + j] -= q * den.coeffs_[j];
  }
  rem.resize(dn - 1);
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

}  // namespace mero
