#include "mero/smooth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "mero/error.hpp"
#include "mero/pencil.hpp"
#include "mero/random.hpp"

namespace mero {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::size_t kOracleGrid = 2048;

bool non_singleton_point(const AttainmentSet& s) { return s.kind != AttainmentKind::singleton && s.kind != AttainmentKind::whole_disk; }

/// Two distinct maximizers of a non-singleton set.
std::pair<double, double> two_points(const AttainmentSet& s) {
  if ((s.kind == AttainmentKind::finite || s.kind == AttainmentKind::arc) && s.points.size() >= 2)
    return {s.points[0].theta, s.points[1].theta};
  return {0.0, kPi};
}

double one_point(const AttainmentSet& s) { return s.points.empty() ? 0.0 : s.points.front().theta; }

/// -|c| |fx| / conj(fx), with the zero cases of the construction.
cd prescribed_value(cd fx, cd c, double ftol, double ctol) {
  if (std::abs(fx) <= ftol) return c;
  if (std::abs(c) <= ctol) return 0.0;
  return -std::abs(c) * std::abs(fx) / std::conj(fx);
}

cd fresh_pole(const MeroFunction& f, cd start, const std::vector<cd>& taken) {
  const double r = f.disk().radius();
  cd p = start;
  for (int k = 0; k < 8; ++k) {
    bool clash = false;
    for (const auto& part : f.parts()) clash = clash || std::abs(part.pole - p) < 1e-6 * r;
    for (cd q : taken) clash = clash || std::abs(q - p) < 1e-6 * r;
    if (!clash) return p;
    p += r / 7.0;
    if (f.disk().depth(p) <= 0.05 * r) p -= 2.0 * r / 7.0 * (k + 1);
  }
  return p;
}

}  // namespace

std::string_view to_string(SmoothReason r) {
  switch (r) {
    case SmoothReason::singleton_product: return "singleton-product";
    case SmoothReason::non_singleton_q: return "non-singleton-Q";
    case SmoothReason::non_singleton_r: return "non-singleton-R";
    case SmoothReason::constant_component: return "constant-component";
  }
  return "unknown";
}

std::string_view to_string(SmoothStatus s) {
  switch (s) {
    case SmoothStatus::smooth: return "smooth";
    case SmoothStatus::not_smooth: return "not-smooth";
    case SmoothStatus::inconclusive: return "inconclusive-at-tolerance";
  }
  return "unknown";
}

SmoothVerdict classify(const MeroFunction& f, const BoundaryOptions& options) {
  if (f.is_zero()) throw IllPosedError("smoothness is undefined for the zero function");
  SmoothVerdict out;
  AttainmentProduct ap = attainment_product(f, options);
  out.q = std::move(ap.q);
  out.r = std::move(ap.r);
  if (out.q.kind == AttainmentKind::whole_disk && out.r.kind == AttainmentKind::whole_disk &&
      out.q.sup_value == 0.0 && out.r.sup_value == 0.0)
    throw IllPosedError("smoothness is undefined for the zero function");

  if (ap.singleton_product) {
    out.reason = SmoothReason::singleton_product;
    out.reasons = {SmoothReason::singleton_product};
    out.status = SmoothStatus::smooth;
    const double margin = std::min(*out.q.margin, *out.r.margin);
    const double tol = std::max(out.q.value_tol, out.r.value_tol);
    if (margin <= 100.0 * tol) {
      out.status = SmoothStatus::inconclusive;
      out.notes.push_back("singleton margin within 100 value tolerances");
    }
    return out;
  }
  if (non_singleton_point(out.q)) out.reasons.push_back(SmoothReason::non_singleton_q);
  if (non_singleton_point(out.r)) out.reasons.push_back(SmoothReason::non_singleton_r);
  if (out.q.kind == AttainmentKind::whole_disk || out.r.kind == AttainmentKind::whole_disk)
    out.reasons.push_back(SmoothReason::constant_component);
  out.reason = out.reasons.front();
  out.status = SmoothStatus::not_smooth;
  return out;
}

double directional_gap(const MeroFunction& f, const MeroFunction& g, double phase) {
  const PencilNorm pencil(f, g, kOracleGrid);
  const double base = pencil(0.0);
  const double ng = pencil.norm_direction();
  if (!(ng > 0.0)) return 0.0;
  const cd dir = std::polar(1.0, phase);
  auto derivative = [&](double sign) {
    const double t[3] = {1e-3, 1e-4, 1e-5};
    double d[3];
    for (int k = 0; k < 3; ++k) d[k] = (pencil(sign * t[k] * dir) - base) / t[k];
    const double a = (10.0 * d[1] - d[0]) / 9.0;
    const double b = (10.0 * d[2] - d[1]) / 9.0;
    return (100.0 * b - a) / 99.0;
  };
  return std::abs(derivative(1.0) + derivative(-1.0)) / ng;
}

DirectionalSummary directional_derivative_oracle(const MeroFunction& f, int trials, std::uint64_t seed) {
  if (f.is_zero()) throw IllPosedError("directional derivatives need a nonzero f");
  DirectionalSummary out;
  out.directions = trials;
  out.seed = seed;
  const Rng root(seed);
  for (int i = 0; i < trials; ++i) {
    Rng rng = root.split(static_cast<std::uint64_t>(i));
    const MeroFunction g = random_meromorphic(rng, f.disk(), 3, 0.6);
    double gap = 0.0;
    for (double phase : {0.0, kPi / 2.0, kPi / 4.0}) gap = std::max(gap, directional_gap(f, g, phase));
    out.gaps.push_back(gap);
    out.max_gap = std::max(out.max_gap, gap);
  }
  out.agreement = out.max_gap <= kAgreementGap;
  out.kink_found = out.max_gap > kKinkGap;
  return out;
}

WitnessPair build_witness(const MeroFunction& f, const OrthoOptions& options) {
  const SmoothVerdict sv = classify(f, options.boundary);
  if (sv.status != SmoothStatus::not_smooth) throw DomainError("witness requested for smooth function");

  const Disk& disk = f.disk();
  const double r = disk.radius();
  // Split component: a point-kind non-singleton first, Q before R.
  bool split_q;
  if (non_singleton_point(sv.q)) split_q = true;
  else if (non_singleton_point(sv.r)) split_q = false;
  else split_q = sv.q.kind == AttainmentKind::whole_disk;
  const AttainmentSet& xs = split_q ? sv.q : sv.r;
  const AttainmentSet& ys = split_q ? sv.r : sv.q;
  const auto [t1, t2] = two_points(xs);
  const double t3 = one_point(ys);
  const cd z1 = disk.boundary_point(t1);
  const cd w1 = disk.boundary_point(t2);
  const cd z2 = disk.boundary_point(t3);

  auto fx = [&](cd z) { return split_q ? f.q(z) : f.analytic(z); };
  auto fy = [&](cd z) { return split_q ? f.analytic(z) : f.q(z); };
  const cd c1 = fy(z2);
  const double scale = xs.sup_value + ys.sup_value;
  const cd v1 = prescribed_value(fx(z1), c1, 1e-12 * (1.0 + scale), 1e-12 * (1.0 + scale));
  const cd v2 = fx(w1);

  const cd p1 = fresh_pole(f, disk.center() + r / 3.0, {});
  const cd p2 = fresh_pole(f, disk.center() - r / 3.0, {p1});

  std::vector<PrincipalPart> parts;
  Remainder rem;
  if (split_q) {
    // b1 (z - p1) + b2 (z - p2) through (z1, v1) and (w1, v2).
    const cd det = (z1 - p1) * (w1 - p2) - (z1 - p2) * (w1 - p1);
    const cd b1 = (v1 * (w1 - p2) - v2 * (z1 - p2)) / det;
    const cd b2 = ((z1 - p1) * v2 - (w1 - p1) * v1) / det;
    if (b1 != cd{}) parts.push_back({p1, {b1}});
    if (b2 != cd{}) parts.push_back({p2, {b2}});
    rem.polynomial = Polynomial::constant(c1);
  } else {
    // Constant companion c1 from b/(z - p1) - b/(z - p2); affine remainder.
    const cd b = c1 / (p2 - p1);
    if (b != cd{}) {
      parts.push_back({p1, {b}});
      parts.push_back({p2, {-b}});
    }
    const cd slope = (v2 - v1) / (w1 - z1);
    rem.polynomial = Polynomial{v1 - slope * z1, slope};
  }

  WitnessPair out{MeroFunction(disk, std::move(parts), std::move(rem)), MeroFunction::zero(disk), {}, false};
  out.g2 = linear_combine(f, out.g1, -1.0);
  out.split_component = split_q ? 'Q' : 'R';
  out.theta_first = t1;
  out.theta_second = t2;
  out.theta_other = t3;

  OrthoOptions oracle = options;
  oracle.mode = OrthoMode::oracle;
  oracle.cross_check = false;
  out.checks[0] = bj_function(f, out.g1, oracle);
  out.checks[1] = bj_function(f, out.g2, oracle);

  const MeroFunction sum = linear_combine(out.g1, out.g2, 1.0);
  OrthoVerdict& third = out.checks[2];
  third.path = OrthoPath::oracle;
  third.lambda = -1.0;
  if (sum.is_zero()) {
    third.verdict = Verdict::orthogonal;
    third.certificate = "g1 + g2 vanishes";
  } else {
    const PencilNorm pencil(f, sum, options.oracle.pencil_grid);
    third.reference = pencil(0.0);
    third.value = pencil(-1.0);
    const bool violated = *third.value < third.reference * (1.0 - options.oracle.violation_tol);
    third.verdict = violated ? Verdict::not_orthogonal : Verdict::inconclusive;
    third.certificate = "||f - (g1 + g2)|| at lambda = -1";
  }

  Rng rng(0x5eed);
  double worst = 0.0;
  for (int k = 0; k < 50;) {
    const cd z = rng.in_disk(disk, 1.0);
    bool near = false;
    for (const MeroFunction* h : {&f, static_cast<const MeroFunction*>(&out.g1)})
      for (const auto& p : h->parts()) near = near || std::abs(z - p.pole) < 1e-3 * r;
    if (near) continue;
    ++k;
    const cd fz = f(z);
    worst = std::max(worst, std::abs(out.g1(z) + out.g2(z) - fz) / (1.0 + std::abs(fz)));
  }
  out.sum_residual = worst;
  out.valid = out.checks[0].orthogonal() && out.checks[1].orthogonal() &&
              out.checks[2].verdict == Verdict::not_orthogonal && worst <= 1e-9;
  return out;
}

bool CorollaryReport::passed() const noexcept {
  return std::all_of(parts.begin(), parts.end(), [](const SuitePart& p) { return p.passed(); });
}

namespace {

std::string describe(const char* what, int index, const SmoothVerdict& v) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%s #%d: %s (Q %s, R %s)", what, index, std::string(to_string(v.status)).c_str(),
                std::string(to_string(v.q.kind)).c_str(), std::string(to_string(v.r.kind)).c_str());
  return buf;
}

std::string format_c(cd c) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "(%.17g%+.17g*i)", c.real(), c.imag());
  return buf;
}

void tally(SuitePart& part, bool ok, std::string failure) {
  ++part.instances;
  if (ok) ++part.conforming;
  else part.failures.push_back(std::move(failure));
}

}  // namespace

CorollaryReport corollary_suite(std::uint64_t seed) {
  CorollaryReport rep;
  rep.parts[0].name = "analytic";
  rep.parts[1].name = "moebius";
  rep.parts[2].name = "split";
  rep.parts[3].name = "divided-by-linear";
  const Rng root(seed);

  for (int i = 0; i < 50; ++i) {
    Rng rng = root.split(1000 + i);
    const Disk disk = random_disk(rng);
    std::optional<MeroFunction> f;
    if (i % 2 == 0) {
      f = from_rational(random_polynomial(rng, rng.integer(1, 5)), Polynomial::constant(1.0), disk);
    } else {
      const std::string text = format_c(rng.complex_normal()) + "*exp(" + format_c(0.5 * rng.complex_normal()) +
                               "*z) + " + format_c(rng.complex_normal()) + "*sin(z) + " +
                               format_c(rng.complex_normal()) + "*cos(" + format_c(0.5 * rng.complex_normal()) +
                               "*z)";
      f = from_expr(Expr::parse(text), disk);
    }
    const SmoothVerdict v = classify(*f);
    tally(rep.parts[0], v.status == SmoothStatus::not_smooth && v.q.kind == AttainmentKind::whole_disk,
          describe("analytic", i, v));
  }

  for (int i = 0; i < 50; ++i) {
    Rng rng = root.split(2000 + i);
    const Disk disk = random_disk(rng);
    cd a = rng.complex_normal(), b = rng.complex_normal(), c{}, d{};
    if (i % 5 == 4) {
      d = rng.complex_normal();
      if (std::abs(a) < 1e-3) a = 1.0;
    } else {
      c = rng.complex_normal();
      d = -c * rng.in_disk(disk, 0.8);
      if (std::abs(a * d - b * c) < 1e-3) b += 1.0;
    }
    const MeroFunction f = from_rational(Polynomial{b, a}, Polynomial{d, c}, disk);
    const SmoothVerdict v = classify(f);
    tally(rep.parts[1], v.status == SmoothStatus::not_smooth, describe("moebius", i, v));
  }

  for (int i = 0; i < 25; ++i) {
    Rng rng = root.split(3000 + i);
    const Disk disk = random_disk(rng);
    const MeroFunction f = random_meromorphic(rng, disk, 3, 0.7);
    const MeroFunction fp(disk, f.parts(), Remainder{});
    const MeroFunction fr(disk, {}, f.remainder());
    const SmoothVerdict vp = classify(fp);
    const SmoothVerdict vr = classify(fr);
    tally(rep.parts[2], vp.status == SmoothStatus::not_smooth && vr.status == SmoothStatus::not_smooth,
          describe("split principal", i, vp) + "; " + describe("split remainder", i, vr));
  }

  for (int i = 0; i < 25; ++i) {
    Rng rng = root.split(4000 + i);
    const Disk disk = random_disk(rng);
    const cd alpha = disk.center();
    std::vector<cd> w(static_cast<std::size_t>(rng.integer(1, 4)) + 1);
    for (auto& x : w) x = rng.complex_normal();
    const bool zero_constant = i % 2 == 1;
    if (zero_constant) w[0] = 0.0;
    const Polynomial analytic = Polynomial(w).taylor_shift(-alpha);
    const MeroFunction g = from_rational(analytic, Polynomial{-alpha, 1.0}, disk);
    const SmoothVerdict v = classify(g);
    const AttainmentKind expected = zero_constant ? AttainmentKind::whole_disk : AttainmentKind::whole_boundary;
    tally(rep.parts[3], v.status == SmoothStatus::not_smooth && v.q.kind == expected, describe("divided", i, v));
  }
  return rep;
}

}  // namespace mero
