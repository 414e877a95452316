#include "mero/funcrep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "mero/error.hpp"
#include "mero/roots.hpp"

namespace mero {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool finite(cd z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

/// Drops trailing coefficients at or below `threshold`.
void prune_trailing(std::vector<cd>& coeffs, double threshold) {
  while (!coeffs.empty() && std::abs(coeffs.back()) <= threshold) coeffs.pop_back();
}

std::string format_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string format_complex(cd v) {
  std::string s = "(" + format_real(v.real());
  s += std::signbit(v.imag()) ? "-" : "+";
  s += format_real(std::abs(v.imag())) + "*i)";
  return s;
}

void append_part_text(const PrincipalPart& p, std::string& out) {
  for (unsigned j = 1; j <= p.order(); ++j) {
    if (p.coeffs[j - 1] == cd{}) continue;
    if (!out.empty()) out += " + ";
    out += format_complex(p.coeffs[j - 1]) + "/(z - " + format_complex(p.pole) + ")";
    if (j > 1) out += "^" + std::to_string(j);
  }
}

void append_polynomial_text(const Polynomial& poly, std::string& out) {
  for (std::size_t k = 0; k < poly.size(); ++k) {
    if (poly[k] == cd{}) continue;
    if (!out.empty()) out += " + ";
    out += format_complex(poly[k]);
    if (k >= 1) out += "*z";
    if (k >= 2) out += "^" + std::to_string(k);
  }
}

/// Interior sample points at two radii, staggered in angle.
std::vector<cd> interior_samples(const Disk& disk, std::size_t count) {
  std::vector<cd> pts;
  pts.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    const double rho = (k % 2 == 0 ? 0.37 : 0.71) * disk.radius();
    const double theta = kTwoPi * (static_cast<double>(k) + 0.31) / static_cast<double>(count);
    pts.push_back(disk.center() + std::polar(rho, theta));
  }
  return pts;
}

/// Finite values of the expression terms on 256 boundary and 64 interior
/// points (interior points next to declared poles are skipped).
void check_analytic(const Remainder& rem, const Disk& disk, std::span<const DeclaredPole> poles,
                    std::span<const double> radii) {
  if (rem.terms.empty()) return;
  std::vector<cd> pts;
  for (std::size_t k = 0; k < 256; ++k)
    pts.push_back(disk.boundary_point(kTwoPi * static_cast<double>(k) / 256.0));
  for (cd p : interior_samples(disk, 64)) {
    bool near = false;
    for (std::size_t i = 0; i < poles.size(); ++i)
      if (std::abs(p - poles[i].location) < 0.5 * radii[i]) near = true;
    if (!near) pts.push_back(p);
  }
  for (std::size_t k = 0; k < pts.size(); ++k) {
    const bool on_boundary = k < 256;
    const double theta = kTwoPi * static_cast<double>(k) / 256.0;
    cd v;
    try {
      v = rem(pts[k]);
    } catch (const EvalError& e) {
      if (on_boundary && e.kind() == EvalError::Kind::non_finite) throw BoundaryOverflowError(theta, e.what());
      throw IllPosedError(std::string("remainder is not analytic on the disk: ") + e.what());
    }
    if (!finite(v)) {
      if (on_boundary) throw BoundaryOverflowError(theta, "remainder overflows on the boundary");
      throw IllPosedError("remainder is not finite on the disk");
    }
  }
}

struct PartialFractions {
  Polynomial quotient;
  std::vector<PrincipalPart> inside;
  std::vector<PrincipalPart> outside;
};

/// Taylor coefficients t_0..t_{n-1} of a(w)/b(w) at w = 0.
std::vector<cd> series_quotient(const Polynomial& a, const Polynomial& b, unsigned n) {
  std::vector<cd> t(n);
  const cd b0 = b[0];
  for (unsigned m = 0; m < n; ++m) {
    cd acc = a[m];
    for (unsigned l = 1; l <= m; ++l) acc -= b[l] * t[m - l];
    t[m] = acc / b0;
  }
  return t;
}

PartialFractions partial_fractions(const Polynomial& num, const Polynomial& den, const Disk& disk) {
  auto [quotient, rem] = Polynomial::divmod(num, den);
  PartialFractions out{std::move(quotient), {}, {}};
  const std::vector<Root> roots = find_roots(den);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    const Root& root = roots[i];
    // h = den / (z - root)^n built from the other roots.
    Polynomial h = Polynomial::constant(den.leading());
    for (std::size_t k = 0; k < roots.size(); ++k) {
      if (k == i) continue;
      h = h * Polynomial{-roots[k].value, 1.0}.pow(roots[k].multiplicity);
    }
    const unsigned n = root.multiplicity;
    const std::vector<cd> t = series_quotient(rem.taylor_shift(root.value), h.taylor_shift(root.value), n);
    PrincipalPart part{root.value, std::vector<cd>(n)};
    for (unsigned j = 1; j <= n; ++j) part.coeffs[j - 1] = t[n - j];
    prune_trailing(part.coeffs, kCoefZeroTol * (1.0 + part.max_abs_coeff()));
    if (part.coeffs.empty()) continue;  // removable singularity
    const double depth = disk.depth(root.value);
    if (std::abs(depth) <= kPoleBoundaryTol * disk.radius())
      throw IllPosedError("pole within 1e-8*r of the boundary circle");
    (depth > 0 ? out.inside : out.outside).push_back(std::move(part));
  }
  return out;
}

/// a_j = (rho^j / M) sum_k f(c + rho e^{i theta_k}) e^{i j theta_k}, j = 1..order.
std::vector<cd> trapezoid_laurent(const Expr& e, cd center, double rho, unsigned order, std::size_t nodes) {
  std::vector<cd> a(order);
  for (std::size_t k = 0; k < nodes; ++k) {
    const double theta = kTwoPi * static_cast<double>(k) / static_cast<double>(nodes);
    const cd unit = std::polar(1.0, theta);
    const cd fz = e(center + rho * unit);
    cd phase = unit;
    for (unsigned j = 0; j < order; ++j) {
      a[j] += fz * phase;
      phase *= unit;
    }
  }
  double rho_pow = 1.0;
  for (unsigned j = 0; j < order; ++j) {
    rho_pow *= rho;
    a[j] *= rho_pow / static_cast<double>(nodes);
  }
  return a;
}

double max_abs(const std::vector<cd>& v) {
  double m = 0.0;
  for (cd c : v) m = std::max(m, std::abs(c));
  return m;
}

/// Merges `add` scaled by lambda into `parts`; pole coincidence uses
/// kPoleMergeTol. `scale` records the contributing magnitude per pole.
void merge_parts(std::vector<PrincipalPart>& parts, std::vector<double>& scale, const std::vector<PrincipalPart>& add,
                 cd lambda) {
  for (const PrincipalPart& p : add) {
    auto it = std::find_if(parts.begin(), parts.end(), [&](const PrincipalPart& q) {
      return std::abs(q.pole - p.pole) <= kPoleMergeTol * (1.0 + std::abs(q.pole));
    });
    const double contrib = std::abs(lambda) * p.max_abs_coeff();
    if (it == parts.end()) {
      PrincipalPart scaled{p.pole, p.coeffs};
      for (cd& c : scaled.coeffs) c *= lambda;
      parts.push_back(std::move(scaled));
      scale.push_back(contrib);
      continue;
    }
    const auto idx = static_cast<std::size_t>(it - parts.begin());
    if (it->coeffs.size() < p.coeffs.size()) it->coeffs.resize(p.coeffs.size());
    for (std::size_t j = 0; j < p.coeffs.size(); ++j) it->coeffs[j] += lambda * p.coeffs[j];
    scale[idx] = std::max(scale[idx], contrib);
  }
}

std::vector<PrincipalPart> combine_parts(const std::vector<PrincipalPart>& a, const std::vector<PrincipalPart>& b,
                                         cd lambda) {
  std::vector<PrincipalPart> parts;
  std::vector<double> scale;
  merge_parts(parts, scale, a, 1.0);
  merge_parts(parts, scale, b, lambda);
  std::vector<PrincipalPart> out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    prune_trailing(parts[i].coeffs, kCoefZeroTol * (1.0 + scale[i]));
    if (!parts[i].coeffs.empty()) out.push_back(std::move(parts[i]));
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

Disk::Disk(cd center, double radius) : center_(center), radius_(radius) {
  if (!(radius > 0.0) || !std::isfinite(radius) || !finite(center))
    throw IllPosedError("disk radius must be positive and finite");
}

cd PrincipalPart::operator()(cd z) const {
  const cd u = 1.0 / (z - pole);
  cd acc{};
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = (acc + *it) * u;
  return acc;
}

cd PrincipalPart::derivative(cd z) const {
  const cd u = 1.0 / (z - pole);
  cd acc{};
  cd upow = u * u;
  for (std::size_t j = 1; j <= coeffs.size(); ++j) {
    acc -= static_cast<double>(j) * coeffs[j - 1] * upow;
    upow *= u;
  }
  return acc;
}

Polynomial PrincipalPart::mirrored() const {
  Polynomial out;
  const Polynomial linear{-pole, 1.0};
  Polynomial power = linear;
  for (cd a : coeffs) {
    out += power * a;
    power = power * linear;
  }
  return out;
}

double PrincipalPart::max_abs_coeff() const { return max_abs(coeffs); }

cd Remainder::operator()(cd z) const {
  cd v = polynomial(z);
  for (const auto& p : outer) v += p(z);
  for (const auto& t : terms) {
    cd e = t.expr(z);
    for (const auto& p : t.subtracted) e -= p(z);
    v += t.weight * e;
  }
  return v;
}

cd Remainder::derivative(cd z, double step) const {
  cd d = polynomial.derivative()(z);
  for (const auto& p : outer) d += p.derivative(z);
  if (terms.empty()) return d;
  constexpr int kNodes = 16;
  cd acc{};
  for (int k = 0; k < kNodes; ++k) {
    const cd w = std::polar(1.0, kTwoPi * k / kNodes);
    cd v{};
    for (const auto& t : terms) {
      cd e = t.expr(z + step * w);
      for (const auto& p : t.subtracted) e -= p(z + step * w);
      v += t.weight * e;
    }
    acc += v / w;
  }
  return d + acc / (static_cast<double>(kNodes) * step);
}

MeroFunction::MeroFunction(Disk disk, std::vector<PrincipalPart> parts, Remainder remainder,
                           std::vector<ContourInfo> contour)
    : disk_(std::move(disk)), parts_(std::move(parts)), remainder_(std::move(remainder)), contour_(std::move(contour)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    const PrincipalPart& p = parts_[i];
    if (p.coeffs.empty() || p.coeffs.back() == cd{})
      throw IllPosedError("principal part needs a nonzero leading coefficient");
    if (!(disk_.depth(p.pole) > 0.0)) throw IllPosedError("principal part pole must lie strictly inside the disk");
    for (std::size_t j = 0; j < i; ++j)
      if (parts_[j].pole == p.pole) throw IllPosedError("duplicate pole");
    q_ += p.mirrored();
  }
  for (const auto& p : remainder_.outer)
    if (!(disk_.depth(p.pole) < 0.0)) throw IllPosedError("remainder pole must lie strictly outside the disk");
}

MeroFunction MeroFunction::zero(const Disk& disk) { return MeroFunction(disk, {}, Remainder{}); }

cd MeroFunction::principal(cd z) const {
  cd v{};
  for (const auto& p : parts_) v += p(z);
  return v;
}

// ---------------------------------------------------------------------------

MeroFunction from_rational(const Polynomial& num, const Polynomial& den, const Disk& disk) {
  if (den.is_zero()) throw IllPosedError("zero denominator polynomial");
  PartialFractions pf = partial_fractions(num, den, disk);
  Remainder rem{std::move(pf.quotient), std::move(pf.outside), {}};
  return MeroFunction(disk, std::move(pf.inside), std::move(rem));
}

MeroFunction from_expr_with_poles(const Expr& e, std::span<const DeclaredPole> poles, const Disk& disk,
                                  const ContourOptions& options) {
  const double r = disk.radius();
  std::vector<double> radii(poles.size());
  for (std::size_t i = 0; i < poles.size(); ++i) {
    const DeclaredPole& p = poles[i];
    if (p.max_order < 1) throw IllPosedError("declared pole order must be at least 1");
    double d = disk.depth(p.location);
    if (!(d >= 1e-6 * r)) throw IllPosedError("declared pole must lie inside the disk, at least 1e-6*r from the boundary");
    for (std::size_t j = 0; j < poles.size(); ++j) {
      if (j == i) continue;
      const double sep = std::abs(p.location - poles[j].location);
      if (sep < 1e-6 * r) throw IllPosedError("declared poles closer than 1e-6*r");
      d = std::min(d, sep);
    }
    radii[i] = 0.5 * d;
  }

  std::vector<PrincipalPart> parts;
  std::vector<ContourInfo> info;
  for (std::size_t i = 0; i < poles.size(); ++i) {
    const DeclaredPole& p = poles[i];
    std::size_t nodes = options.initial_nodes;
    std::vector<cd> prev = trapezoid_laurent(e, p.location, radii[i], p.max_order, nodes);
    std::vector<cd> coeffs;
    while (true) {
      if (nodes >= options.max_nodes)
        throw QuadratureError("contour quadrature did not converge at the pole " + format_complex(p.location));
      nodes *= 2;
      std::vector<cd> next = trapezoid_laurent(e, p.location, radii[i], p.max_order, nodes);
      double change = 0.0;
      for (std::size_t j = 0; j < next.size(); ++j) change = std::max(change, std::abs(next[j] - prev[j]));
      if (change <= options.convergence_tol * std::max(max_abs(next), 1e-300)) {
        coeffs = std::move(next);
        break;
      }
      prev = std::move(next);
    }
    prune_trailing(coeffs, kCoefZeroTol * (1.0 + max_abs(coeffs)));
    if (coeffs.empty())
      throw IllPosedError("spurious pole: every Laurent coefficient vanishes at " + format_complex(p.location));
    parts.push_back({p.location, std::move(coeffs)});
    info.push_back({p.location, radii[i], nodes});
  }

  Remainder rem;
  rem.terms.push_back({1.0, e, parts});
  check_analytic(rem, disk, poles, radii);
  return MeroFunction(disk, std::move(parts), std::move(rem), std::move(info));
}

MeroFunction from_expr(const Expr& e, const Disk& disk) {
  if (auto rat = e.as_rational()) return from_rational(rat->numerator, rat->denominator, disk);

  RationalForm rational{Polynomial{}, Polynomial::constant(1.0)};
  std::vector<Expr::Term> transcendental;
  for (const Expr::Term& t : e.additive_terms()) {
    auto r = t.expr.as_rational();
    if (!r) {
      transcendental.push_back(t);
      continue;
    }
    if (t.sign < 0) r->numerator = -r->numerator;
    if (r->denominator == rational.denominator) {
      rational.numerator += r->numerator;
    } else {
      rational.numerator = rational.numerator * r->denominator + r->numerator * rational.denominator;
      rational.denominator = rational.denominator * r->denominator;
    }
  }
  const MeroFunction base = from_rational(rational.numerator, rational.denominator, disk);
  Remainder rem = base.remainder();
  rem.terms.push_back({1.0, Expr::sum(transcendental), {}});
  check_analytic(rem, disk, {}, {});
  return MeroFunction(disk, base.parts(), std::move(rem));
}

Polynomial q_polynomial(const MeroFunction& f) { return f.q_polynomial(); }

MeroFunction linear_combine(const MeroFunction& f, const MeroFunction& g, cd lambda) {
  if (!(f.disk() == g.disk())) throw DomainError("linear_combine: functions live on different disks");
  if (lambda == cd{}) return f;

  std::vector<PrincipalPart> parts = combine_parts(f.parts(), g.parts(), lambda);

  Remainder rem;
  rem.polynomial = f.remainder().polynomial + g.remainder().polynomial * lambda;
  rem.outer = combine_parts(f.remainder().outer, g.remainder().outer, lambda);
  rem.terms = f.remainder().terms;
  for (const ExprTerm& t : g.remainder().terms) {
    auto it = std::find_if(rem.terms.begin(), rem.terms.end(), [&](const ExprTerm& u) {
      return u.expr.same_tree(t.expr) && u.subtracted == t.subtracted;
    });
    if (it != rem.terms.end()) {
      it->weight += lambda * t.weight;
    } else {
      rem.terms.push_back({lambda * t.weight, t.expr, t.subtracted});
    }
  }
  std::erase_if(rem.terms, [](const ExprTerm& t) { return t.weight == cd{}; });

  std::vector<ContourInfo> contour = f.contour();
  contour.insert(contour.end(), g.contour().begin(), g.contour().end());
  return MeroFunction(f.disk(), std::move(parts), std::move(rem), std::move(contour));
}

FunctionText to_text(const MeroFunction& f) {
  FunctionText out;
  for (const auto& p : f.parts()) append_part_text(p, out.expr);
  const Remainder& rem = f.remainder();
  append_polynomial_text(rem.polynomial, out.expr);
  for (const auto& p : rem.outer) append_part_text(p, out.expr);
  bool needs_poles = false;
  for (const auto& t : rem.terms) {
    std::string inner = "(" + t.expr.to_string() + ")";
    for (const auto& p : t.subtracted) {
      std::string s;
      append_part_text(p, s);
      if (!s.empty()) inner += " - (" + s + ")";
      needs_poles = true;
    }
    if (!out.expr.empty()) out.expr += " + ";
    out.expr += format_complex(t.weight) + "*(" + inner + ")";
  }
  if (out.expr.empty()) out.expr = "0";
  if (needs_poles)
    for (const auto& p : f.parts()) out.poles.push_back({p.pole, p.order()});
  return out;
}

}  // namespace mero
