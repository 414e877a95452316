#include "mero/selftest.hpp"

#include <cmath>
#include <cstdio>
#include <functional>

#include "mero/boundary.hpp"
#include "mero/catalog.hpp"
#include "mero/error.hpp"
#include "mero/funcrep.hpp"
#include "mero/ortho.hpp"
#include "mero/random.hpp"
#include "mero/roots.hpp"
#include "mero/smooth.hpp"

namespace mero {

namespace {

std::string count_detail(int bad, int total) {
  return std::to_string(total - bad) + "/" + std::to_string(total) + " conforming";
}

SelftestCheck expr_round_trip(const Rng& root) {
  int bad = 0, total = 0;
  for (int i = 0; i < 200; ++i) {
    Rng rng = root.split(100 + i);
    const Expr e = Expr::parse(random_rational_text(rng, 3));
    const auto rat = e.as_rational();
    ++total;
    if (!rat) {
      ++bad;
      continue;
    }
    for (int k = 0; k < 10; ++k) {
      const cd z = rng.complex_normal();
      cd direct;
      try {
        direct = e(z);
      } catch (const EvalError&) {
        continue;
      }
      const cd den = rat->denominator(z);
      if (std::abs(den) < 1e-8 || std::abs(direct) > 1e8) continue;
      const cd viaq = rat->numerator(z) / den;
      if (std::abs(viaq - direct) > 1e-10 * (1.0 + std::abs(direct))) {
        ++bad;
        break;
      }
    }
  }
  return {"expr", "rational round trip", bad == 0, count_detail(bad, total)};
}

/// num / prod (z - p_k) with poles inside and outside the disk.
struct RandomRational {
  Polynomial num;
  Polynomial den;
};

RandomRational random_rational(Rng& rng, const Disk& disk) {
  std::vector<cd> roots;
  const int inside = rng.integer(1, 3);
  const int outside = rng.integer(0, 2);
  for (int k = 0; k < inside; ++k) roots.push_back(rng.in_disk(disk, 0.8));
  for (int k = 0; k < outside; ++k)
    roots.push_back(disk.center() + std::polar(disk.radius() * rng.uniform(1.3, 3.0), rng.uniform(0.0, 6.283)));
  return {random_polynomial(rng, rng.integer(0, 5)), Polynomial::from_roots(roots)};
}

SelftestCheck decomposition_identity(const Rng& root) {
  int bad = 0;
  for (int i = 0; i < 20; ++i) {
    Rng rng = root.split(200 + i);
    const Disk disk = random_disk(rng);
    const auto [num, den] = random_rational(rng, disk);
    const MeroFunction f = from_rational(num, den, disk);
    for (int k = 0; k < 100; ++k) {
      const cd z = rng.in_disk(disk, 1.0);
      const cd exact = num(z) / den(z);
      if (std::abs(den(z)) < 1e-6 || !std::isfinite(std::abs(exact))) continue;
      if (std::abs(f(z) - exact) > 1e-9 * (1.0 + std::abs(exact))) {
        ++bad;
        break;
      }
    }
  }
  return {"funcrep", "decomposition identity", bad == 0, count_detail(bad, 20)};
}

SelftestCheck q_linearity(const Rng& root) {
  int bad = 0;
  for (int i = 0; i < 20; ++i) {
    Rng rng = root.split(300 + i);
    const Disk disk = random_disk(rng);
    const MeroFunction f = random_meromorphic(rng, disk);
    const MeroFunction g = random_meromorphic(rng, disk);
    const cd lambda = rng.complex_normal();
    const Polynomial lhs = q_polynomial(linear_combine(f, g, lambda));
    const Polynomial rhs = q_polynomial(f) + lambda * q_polynomial(g);
    const double scale = 1.0 + std::max(q_polynomial(f).max_abs_coeff(), std::abs(lambda) * q_polynomial(g).max_abs_coeff());
    const std::size_t n = std::max(lhs.size(), rhs.size());
    for (std::size_t k = 0; k < n; ++k)
      if (std::abs(lhs[k] - rhs[k]) > 1e-12 * scale) {
        ++bad;
        break;
      }
  }
  return {"funcrep", "companion polynomial linearity", bad == 0, count_detail(bad, 20)};
}

std::string poly_text(const Polynomial& p) {
  std::string s;
  for (std::size_t k = 0; k < p.size(); ++k) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "%s(%.17g%+.17g*i)*z^%zu", k ? " + " : "", p[k].real(), p[k].imag(), k);
    s += buf;
  }
  return s.empty() ? "0" : s;
}

SelftestCheck contour_cross_check(const Rng& root) {
  int bad = 0;
  for (int i = 0; i < 5; ++i) {
    Rng rng = root.split(400 + i);
    const Disk disk(0.0, 1.0);
    std::vector<cd> poles;
    while (poles.size() < 2) {
      const cd p = rng.in_disk(disk, 0.6);
      if (poles.empty() || std::abs(p - poles[0]) > 0.2) poles.push_back(p);
    }
    const Polynomial num = random_polynomial(rng, 2);
    const Polynomial den = Polynomial::from_roots(poles);
    const MeroFunction exact = from_rational(num, den, disk);
    std::vector<DeclaredPole> decl;
    for (const auto& p : exact.parts()) decl.push_back({p.pole, 2});
    const Expr e = Expr::parse("(" + poly_text(num) + ")/(" + poly_text(den) + ")");
    const MeroFunction quad = from_expr_with_poles(e, decl, disk);
    for (std::size_t k = 0; k < exact.parts().size(); ++k) {
      const auto& a = exact.parts()[k];
      const auto& b = quad.parts()[k];
      if (a.order() != b.order() || std::abs(a.coeffs[0] - b.coeffs[0]) > 1e-9 * (1.0 + std::abs(a.coeffs[0]))) ++bad;
    }
  }
  return {"funcrep", "contour coefficients match partial fractions", bad == 0, count_detail(bad, 5)};
}

SelftestCheck boundary_scaling(const Rng& root) {
  int bad = 0;
  for (int i = 0; i < 10; ++i) {
    Rng rng = root.split(500 + i);
    const Disk disk = random_disk(rng);
    const MeroFunction f = random_meromorphic(rng, disk);
    const cd c = rng.complex_normal();
    const MeroFunction cf = linear_combine(MeroFunction::zero(disk), f, c);
    const AttainmentSet a = sup_on_disk(q_component(f), disk);
    const AttainmentSet b = sup_on_disk(q_component(cf), disk);
    if (a.kind != b.kind || std::abs(b.sup_value - std::abs(c) * a.sup_value) > 1e-12 * b.sup_value) ++bad;
  }
  return {"boundary", "scaling", bad == 0, count_detail(bad, 10)};
}

SelftestCheck boundary_max_modulus(const Rng& root) {
  int bad = 0;
  for (int i = 0; i < 10; ++i) {
    Rng rng = root.split(600 + i);
    const Disk disk = random_disk(rng);
    const MeroFunction f = random_meromorphic(rng, disk);
    const AttainmentSet a = sup_on_disk(q_component(f), disk);
    if (a.kind == AttainmentKind::whole_disk) continue;
    for (int k = 0; k < 64; ++k)
      if (std::abs(f.q(rng.in_disk(disk, 0.999))) > a.sup_value) {
        ++bad;
        break;
      }
  }
  return {"boundary", "maximum modulus", bad == 0, count_detail(bad, 10)};
}

SelftestCheck l1_vs_kinks(const Rng& root) {
  int bad = 0;
  Rng rng = root.split(700);
  for (int i = 0; i < 300; ++i) {
    cd z = rng.complex_normal(), u = rng.complex_normal(), w = rng.complex_normal(), v = rng.complex_normal();
    if (i % 5 == 0) z = 0.0;
    if (i % 7 == 0) u = 0.0;
    const bool orth = bj_l1(z, u, w, v).orthogonal();
    // Minimum of |z + l w| + |u + l v| over the kink points.
    double best = std::abs(z) + std::abs(u);
    for (cd l : {w != cd{} ? -z / w : cd{}, v != cd{} ? -u / v : cd{}})
      best = std::min(best, std::abs(z + l * w) + std::abs(u + l * v));
    const bool oracle = best >= (std::abs(z) + std::abs(u)) * (1.0 - 1e-12);
    if (orth != oracle) ++bad;
  }
  return {"ortho", "l1 characterization vs kink minimum", bad == 0, count_detail(bad, 300)};
}

SelftestCheck eocs_vs_sampling(const Rng& root) {
  int bad = 0;
  Rng rng = root.split(800);
  SamplingPlan plan;
  plan.grid = 41;
  plan.rays = 90;
  for (int i = 0; i < 100; ++i) {
    OrthoTuple t{rng.complex_normal(), rng.complex_normal(), rng.complex_normal(), rng.complex_normal()};
    if (i % 4 == 0) t.w = -(std::conj(t.u) / std::abs(t.u)) * (std::abs(t.z) / std::conj(t.z)) * t.v;
    if (i % 6 == 1) t.z = 0.0;
    const OrthoVerdict v = eocs_singleton(t);
    const CoverageResult c = eocs_family_sampled({t}, plan);
    if (v.orthogonal() != c.covered) ++bad;
  }
  return {"ortho", "singleton test vs coverage sampling", bad == 0, count_detail(bad, 100)};
}

SelftestCheck catalog_verdicts() {
  int bad = 0;
  std::string detail;
  for (const auto& e : regression_catalog()) {
    const MeroFunction f = load_function(e.file);
    const SmoothVerdict v = classify(f);
    if (v.smooth() != e.smooth || v.status == SmoothStatus::inconclusive) {
      ++bad;
      detail += e.name + " ";
    }
  }
  const int total = static_cast<int>(regression_catalog().size());
  return {"smooth", "regression verdicts", bad == 0, detail.empty() ? count_detail(bad, total) : "failed: " + detail};
}

SelftestCheck corollaries(std::uint64_t seed) {
  const CorollaryReport r = corollary_suite(seed);
  std::string detail;
  for (const auto& p : r.parts) detail += p.name + " " + std::to_string(p.conforming) + "/" + std::to_string(p.instances) + "; ";
  return {"smooth", "corollary suites", r.passed(), detail};
}

SelftestCheck witness_septic_over_quintic() {
  const MeroFunction f = load_function(catalog_entry("septic-over-quintic").file);
  const WitnessPair w = build_witness(f);
  return {"smooth", "witness pair", w.valid, w.valid ? "all checks hold" : "a check failed"};
}

}  // namespace

std::vector<SelftestCheck> run_selftest(std::uint64_t seed) {
  const Rng root(seed);
  std::vector<std::function<SelftestCheck()>> checks{
      [&] { return expr_round_trip(root); },
      [&] { return decomposition_identity(root); },
      [&] { return q_linearity(root); },
      [&] { return contour_cross_check(root); },
      [&] { return boundary_scaling(root); },
      [&] { return boundary_max_modulus(root); },
      [&] { return l1_vs_kinks(root); },
      [&] { return eocs_vs_sampling(root); },
      [] { return catalog_verdicts(); },
      [&] { return corollaries(seed); },
      [] { return witness_septic_over_quintic(); },
  };
  std::vector<SelftestCheck> out;
  for (const auto& run : checks) {
    try {
      out.push_back(run());
    } catch (const std::exception& e) {
      out.push_back({"selftest", "check raised", false, e.what()});
    }
  }
  return out;
}

}  // namespace mero
