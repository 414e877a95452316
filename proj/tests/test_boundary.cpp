#include <cmath>
#include <numbers>

#include "doctest.h"
#include "mero/boundary.hpp"
#include "mero/catalog.hpp"
#include "mero/error.hpp"
#include "mero/random.hpp"

using namespace mero;

namespace {

constexpr double kPi = std::numbers::pi;

Component poly_component(const Polynomial& p) {
  return {[p](cd z) { return p(z); }, [d = p.derivative()](cd z) { return d(z); }};
}

MeroFunction catalog(const char* name) { return load_function(catalog_entry(name).file); }

}  // namespace

TEST_CASE("sup_on_disk examples") {
  const AttainmentSet a = sup_on_disk(poly_component(Polynomial{1.0, -3.0}), Disk(0.0, 2.0));
  CHECK(a.kind == AttainmentKind::singleton);
  CHECK(a.sup_value == doctest::Approx(7.0).epsilon(1e-12));
  CHECK(angle_distance(a.points[0].theta, kPi) <= 1e-9);
  REQUIRE(a.margin);
  CHECK(*a.margin > 1e-3);

  const AttainmentSet b = sup_on_disk(poly_component(Polynomial{1.0, 0.0, 1.0}), Disk(0.0, 2.0));
  CHECK(b.kind == AttainmentKind::finite);
  CHECK(b.sup_value == doctest::Approx(5.0).epsilon(1e-12));
  REQUIRE(b.points.size() == 2);
  CHECK(angle_distance(b.points[0].theta, 0.0) <= 1e-9);
  CHECK(angle_distance(b.points[1].theta, kPi) <= 1e-9);

  const AttainmentSet c = sup_on_disk(poly_component(Polynomial{0.0, cd{0.0, -1.0 / kPi}}), Disk(0.0, 1.0));
  CHECK(c.kind == AttainmentKind::whole_boundary);
  CHECK(c.sup_value == doctest::Approx(1.0 / kPi).epsilon(1e-12));
  CHECK_FALSE(c.margin);
}

TEST_CASE("constant and arc kinds") {
  const AttainmentSet k = sup_on_disk(poly_component(Polynomial{cd{3.0, 4.0}}), Disk(1.0, 1.0));
  CHECK(k.kind == AttainmentKind::whole_disk);
  CHECK(k.sup_value == doctest::Approx(5.0));
  const AttainmentSet zero = sup_on_disk(poly_component(Polynomial{}), Disk(0.0, 1.0));
  CHECK(zero.kind == AttainmentKind::whole_disk);
  CHECK(zero.sup_value == 0.0);

  // Clipped modulus: flat on the arc Re z >= -1/2 of the unit circle.
  const Component clipped{[](cd z) { return cd{std::min(1.0, 1.5 + z.real())}; }, {}};
  const AttainmentSet arc = sup_on_disk(clipped, Disk(0.0, 1.0));
  CHECK(arc.kind == AttainmentKind::arc);
  REQUIRE(arc.arcs.size() == 1);
  CHECK(angle_distance(arc.arcs[0].first, 4 * kPi / 3) <= 2e-3);
  CHECK(angle_distance(arc.arcs[0].second, 2 * kPi / 3) <= 2e-3);
}

TEST_CASE("norm and attainment product of the regression functions") {
  const NormBundle n = norm(catalog("quartic-over-quadratic"));
  CHECK(n.norm_q == doctest::Approx(7.0).epsilon(1e-9));
  CHECK(n.norm_r == doctest::Approx(7.0).epsilon(1e-9));
  CHECK(n.norm_total == n.norm_q + n.norm_r);

  const AttainmentProduct p1 = attainment_product(catalog("quartic-over-quadratic"));
  CHECK(p1.singleton_product);
  CHECK(angle_distance(p1.q.points[0].theta, kPi) <= 1e-9);
  CHECK(angle_distance(p1.r.points[0].theta, 0.0) <= 1e-9);

  const AttainmentProduct p3 = attainment_product(catalog("septic-over-quintic"));
  CHECK_FALSE(p3.singleton_product);
  CHECK(p3.r.kind == AttainmentKind::finite);
  CHECK(p3.r.points.size() == 2);
}

TEST_CASE("overflow on the boundary") {
  FunctionFile file;
  file.disk = Disk(0.0, 1.0);
  file.expr = "exp(exp(24*z^2 + 89*z + 711))";
  CHECK_THROWS_AS(load_function(file), BoundaryOverflowError);
  // Overflow that only shows up on the fine grid is caught there.
  const Component steep{[](cd z) { return std::exp(cd{800.0 * z.real(), 0.0}); }, {}};
  CHECK_THROWS_AS(sup_on_disk(steep, Disk(0.0, 1.0)), BoundaryOverflowError);
}

TEST_CASE("profile rows") {
  const auto rows = profile(catalog("quartic-over-quadratic"), 4);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].theta == 0.0);
  CHECK(rows[0].abs_q == doctest::Approx(5.0));
  CHECK(rows[0].abs_r == doctest::Approx(7.0));
  CHECK(rows[2].abs_q == doctest::Approx(7.0));
  CHECK(profile(catalog("quartic-over-quadratic"), 0).empty());
}

TEST_CASE("angles") {
  CHECK(wrap_angle(-kPi / 2) == doctest::Approx(3 * kPi / 2));
  CHECK(wrap_angle(2 * kPi) == 0.0);
  CHECK_FALSE(std::signbit(wrap_angle(-0.0)));
  CHECK(angle_distance(0.1, 2 * kPi - 0.1) == doctest::Approx(0.2));
}

TEST_CASE("property: maximum modulus") {
  Rng root(31);
  for (int i = 0; i < 30; ++i) {
    Rng rng = root.split(i);
    const Disk disk = random_disk(rng);
    const MeroFunction f = random_meromorphic(rng, disk);
    for (const Component& c : {q_component(f), r_component(f)}) {
      const AttainmentSet s = sup_on_disk(c, disk);
      if (s.kind == AttainmentKind::whole_disk) continue;
      for (int k = 0; k < 64; ++k) CHECK(std::abs(c.value(rng.in_disk(disk, 0.999))) < s.sup_value);
    }
  }
}

TEST_CASE("property: grid refinement is stable on the regression functions") {
  BoundaryOptions fine;
  fine.grid = 8192;
  for (const auto& e : regression_catalog()) {
    const MeroFunction f = load_function(e.file);
    const AttainmentProduct a = attainment_product(f);
    const AttainmentProduct b = attainment_product(f, fine);
    CAPTURE(e.name);
    CHECK(std::abs(a.q.sup_value - b.q.sup_value) <= 1e-9 * std::max(1.0, b.q.sup_value));
    CHECK(std::abs(a.r.sup_value - b.r.sup_value) <= 1e-9 * std::max(1.0, b.r.sup_value));
    CHECK(a.q.kind == b.q.kind);
    CHECK(a.r.kind == b.r.kind);
  }
}

TEST_CASE("property: rotation equivariance") {
  Rng root(32);
  for (int i = 0; i < 20; ++i) {
    Rng rng = root.split(i);
    const Disk disk = random_disk(rng);
    const Polynomial p = random_polynomial(rng, rng.integer(1, 4)).taylor_shift(-disk.center());
    const double phi = rng.uniform(0.0, 2 * kPi);
    const cd turn = std::polar(1.0, phi);
    const cd a = disk.center();
    const Component base = poly_component(p);
    const Component rotated{[&](cd z) { return p(turn * (z - a) + a); },
                            [&, d = p.derivative()](cd z) { return turn * d(turn * (z - a) + a); }};
    const AttainmentSet s = sup_on_disk(base, disk);
    const AttainmentSet t = sup_on_disk(rotated, disk);
    CHECK(s.kind == t.kind);
    CHECK(std::abs(s.sup_value - t.sup_value) <= 1e-10 * s.sup_value);
    if (s.kind != t.kind || s.points.size() != t.points.size()) continue;
    for (const auto& pt : t.points) {
      const double expect = wrap_angle(pt.theta + phi);
      bool found = false;
      for (const auto& q : s.points) found = found || angle_distance(q.theta, expect) <= 1e-9;
      CHECK(found);
    }
  }
}

TEST_CASE("property: scaling") {
  Rng root(33);
  for (int i = 0; i < 30; ++i) {
    Rng rng = root.split(i);
    const Disk disk = random_disk(rng);
    const Polynomial p = random_polynomial(rng, rng.integer(0, 4));
    const cd c = rng.complex_normal();
    const AttainmentSet s = sup_on_disk(poly_component(p), disk);
    const AttainmentSet t = sup_on_disk(poly_component(c * p), disk);
    CHECK(s.kind == t.kind);
    CHECK(std::abs(t.sup_value - std::abs(c) * s.sup_value) <= 1e-12 * t.sup_value);
    REQUIRE(s.points.size() == t.points.size());
    for (std::size_t k = 0; k < s.points.size(); ++k) CHECK(angle_distance(s.points[k].theta, t.points[k].theta) <= 1e-9);
  }
}
