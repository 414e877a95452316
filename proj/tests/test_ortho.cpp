#include <cmath>

#include "doctest.h"
#include "mero/catalog.hpp"
#include "mero/error.hpp"
#include "mero/optimize.hpp"
#include "mero/ortho.hpp"
#include "mero/pencil.hpp"
#include "mero/random.hpp"

using namespace mero;

namespace {

double l1(cd z, cd u, cd w, cd v, cd lambda) { return std::abs(z + lambda * w) + std::abs(u + lambda * v); }

/// min over lambda of |z + lambda w| + |u + lambda v| on a 201x201 grid of
/// |Re|, |Im| <= 4 followed by a Nelder-Mead polish.
double grid_min(cd z, cd u, cd w, cd v) {
  double best = l1(z, u, w, v, 0.0);
  cd arg = 0.0;
  for (int i = 0; i <= 200; ++i)
    for (int j = 0; j <= 200; ++j) {
      const cd lambda{-4.0 + i * 0.04, -4.0 + j * 0.04};
      if (const double val = l1(z, u, w, v, lambda); val < best) {
        best = val;
        arg = lambda;
      }
    }
  const auto nm = nelder_mead_2d([&](double x, double y) { return l1(z, u, w, v, {x, y}); }, {arg.real(), arg.imag()}, 0.04);
  return std::min(best, nm.value);
}

bool grid_orthogonal(cd z, cd u, cd w, cd v) {
  return grid_min(z, u, w, v) >= (std::abs(z) + std::abs(u)) * (1.0 - 1e-9);
}

MeroFunction rational(const Polynomial& num, const Polynomial& den, const Disk& disk) { return from_rational(num, den, disk); }

}  // namespace

TEST_CASE("bj_l1 examples") {
  const OrthoVerdict a = bj_l1(1.0, 1.0, 1.0, -1.0);
  CHECK(a.orthogonal());
  CHECK(a.condition == 1);
  CHECK(a.path == OrthoPath::exact_l1);

  const OrthoVerdict b = bj_l1(0.0, 1.0, 2.0, 1.0);
  CHECK(b.orthogonal());
  REQUIRE(b.witness_scalar);
  CHECK(std::abs(*b.witness_scalar - cd{-0.5}) <= 1e-15);

  const OrthoVerdict c = bj_l1(0.0, 1.0, 1.0, 2.0);
  CHECK_FALSE(c.orthogonal());
  REQUIRE(c.witness_scalar);
  CHECK(std::abs(*c.witness_scalar - cd{-2.0}) <= 1e-15);
  REQUIRE(c.lambda);
  CHECK(l1(0.0, 1.0, 1.0, 2.0, *c.lambda) < 1.0);

  CHECK(bj_l1(0.0, 0.0, 3.0, -2.0).orthogonal());
  // z = 0 and w = 0: orthogonal exactly when v = 0.
  CHECK(bj_l1(0.0, 1.0, 0.0, 0.0).orthogonal());
  CHECK_FALSE(bj_l1(0.0, 1.0, 0.0, 0.5).orthogonal());

  for (auto [z, u, w, v] : {std::array<cd, 4>{1.0, 1.0, 1.0, -1.0}, {0.0, 1.0, 2.0, 1.0}, {0.0, 1.0, 1.0, 2.0}})
    CHECK(bj_l1(z, u, w, v).orthogonal() == grid_orthogonal(z, u, w, v));
}

TEST_CASE("eocs_singleton examples") {
  const OrthoVerdict a = eocs_singleton({1.0, 1.0, 1.0, -1.0});
  CHECK(a.orthogonal());
  CHECK(a.condition == 4);
  const OrthoVerdict b = eocs_singleton({0.0, 1.0, 1.0, 0.0});
  CHECK(b.orthogonal());
  CHECK(b.condition == 2);
  const OrthoVerdict c = eocs_singleton({0.0, 1.0, 1.0, 2.0});
  CHECK_FALSE(c.orthogonal());
  CHECK(c.condition == 0);
  CHECK(eocs_singleton({0.0, 5.0, 0.0, 7.0}).condition == 1);
  CHECK(eocs_singleton({1.0, 1.0, 0.0, 2.0}).condition == 3);
  CHECK_FALSE(eocs_singleton({1.0, 2.0, 0.0, 1.0}).orthogonal());

  // The negation case z = 0, |w| < |v| is refuted at lambda = -u / (2v).
  const OrthoTuple t{0.0, 1.0, 1.0, 2.0};
  const cd lambda = -t.u / (2.0 * t.v);
  CHECK(l1(t.z, t.u, t.w, t.v, lambda) < 1.0);
  CHECK_FALSE(eocs_family_sampled({t}).covered);
}

TEST_CASE("eocs_family_sampled examples") {
  CHECK(eocs_family_sampled({{1.0, 1.0, 1.0, -1.0}}).covered);

  const CoverageResult open = eocs_family_sampled({{1.0, 1.0, 0.0, 0.0}});
  CHECK_FALSE(open.covered);
  REQUIRE(open.uncovered);
  CHECK(std::abs(1.0 + *open.uncovered) < 1.0);

  const std::vector<OrthoTuple> pair{{1.0, 1.0, 1.0, 0.0}, {1.0, -1.0, 1.0, 0.0}};
  CHECK_FALSE(eocs_singleton(pair[0]).orthogonal());
  CHECK_FALSE(eocs_singleton(pair[1]).orthogonal());
  CHECK(eocs_family_sampled(pair).covered);
}

TEST_CASE("bj_function examples") {
  const MeroFunction f = load_function(catalog_entry("quartic-over-quadratic").file);
  const MeroFunction g = rational(Polynomial{-2.0, 1.0}, Polynomial{1.0}, f.disk());
  const OrthoVerdict a = bj_function(f, g);
  CHECK(a.orthogonal());
  CHECK(a.path == OrthoPath::exact_eocs_singleton);

  const OrthoVerdict self = bj_function(f, f);
  CHECK_FALSE(self.orthogonal());
  REQUIRE(self.lambda);
  CHECK(*self.lambda == cd{-1.0});
  CHECK(*self.value == doctest::Approx(0.0));
  CHECK(self.reference == doctest::Approx(14.0));

  const Disk unit(0.0, 1.0);
  const MeroFunction inv = rational(Polynomial{1.0}, Polynomial{0.0, 1.0}, unit);
  const MeroFunction inv2 = rational(Polynomial{1.0}, Polynomial{0.0, 0.0, 1.0}, unit);
  const OrthoVerdict c = bj_function(inv, inv2);
  CHECK(c.path == OrthoPath::oracle);
  CHECK(c.orthogonal());
}

TEST_CASE("bj_function errors and trivial cases") {
  const Disk unit(0.0, 1.0);
  const MeroFunction f = rational(Polynomial{1.0}, Polynomial{0.0, 1.0}, unit);
  CHECK_THROWS_AS(bj_function(MeroFunction::zero(unit), f), DomainError);
  CHECK_THROWS_AS(bj_function(f, MeroFunction::zero(Disk(0.0, 2.0))), DomainError);
  const OrthoVerdict t = bj_function(f, MeroFunction::zero(unit));
  CHECK(t.orthogonal());
  CHECK(t.path == OrthoPath::trivial);
  OrthoOptions exact;
  exact.mode = OrthoMode::exact;
  CHECK_THROWS_AS(bj_function(f, f, exact), DomainError);
}

TEST_CASE("property: l1 characterization matches the grid oracle") {
  Rng rng(41);
  for (int i = 0; i < 200; ++i) {
    cd z = rng.complex_normal(), u = rng.complex_normal(), w = rng.complex_normal(), v = rng.complex_normal();
    if (i % 4 == 1) z = 0.0;
    if (i % 4 == 2) u = 0.0;
    // Keep violations inside the grid square.
    if (std::abs(w) < 0.3 || std::abs(v) < 0.3) continue;
    CAPTURE(i);
    CHECK(bj_l1(z, u, w, v).orthogonal() == grid_orthogonal(z, u, w, v));
  }
}

TEST_CASE("property: homogeneity") {
  Rng rng(42);
  for (int i = 0; i < 300; ++i) {
    cd z = rng.complex_normal(), u = rng.complex_normal(), w = rng.complex_normal(), v = rng.complex_normal();
    if (i % 3 == 0) w = -(std::conj(u) / std::abs(u)) * (std::abs(z) / std::conj(z)) * v;
    if (i % 5 == 0) z = 0.0;
    const cd phase = std::polar(1.0, rng.uniform(0.0, 6.283));
    const double scale = rng.uniform(0.1, 10.0) * (rng.coin() ? 1.0 : -1.0);
    const bool base = bj_l1(z, u, w, v).orthogonal();
    CHECK(bj_l1(phase * z, phase * u, w, v).orthogonal() == base);
    CHECK(bj_l1(scale * z, scale * u, w, v).orthogonal() == base);
  }

  Rng frng(43);
  for (int i = 0; i < 6; ++i) {
    const Disk disk = random_disk(frng);
    const MeroFunction f = random_meromorphic(frng, disk);
    const MeroFunction g = random_meromorphic(frng, disk);
    const MeroFunction cg = linear_combine(MeroFunction::zero(disk), g, frng.complex_normal());
    CHECK(bj_function(f, g).verdict == bj_function(f, cg).verdict);
  }
}

TEST_CASE("property: families with vanishing second pair reduce to the covering-set test") {
  Rng rng(44);
  for (int i = 0; i < 60; ++i) {
    std::vector<OrthoTuple> family;
    for (int k = rng.integer(1, 3); k > 0; --k) family.push_back({rng.complex_normal(), rng.complex_normal(), 0.0, 0.0});
    const auto pairs = eocs_as_ocs(family);
    REQUIRE(pairs);
    SamplingPlan plan;
    plan.grid = 41;
    plan.rays = 90;
    CHECK(eocs_family_sampled(family, plan).covered == ocs_family_sampled(*pairs, plan).covered);
  }
  CHECK_FALSE(eocs_as_ocs({{1.0, 1.0, 1.0, 0.0}}));
}

TEST_CASE("property: the pencil norm is convex") {
  Rng rng(45);
  for (int i = 0; i < 10; ++i) {
    const Disk disk = random_disk(rng);
    const MeroFunction f = random_meromorphic(rng, disk);
    const MeroFunction g = random_meromorphic(rng, disk);
    const PencilNorm phi(f, g);
    for (int k = 0; k < 10; ++k) {
      const cd l1v = rng.complex_normal(), l2v = rng.complex_normal();
      const double t = rng.uniform();
      CHECK(phi(t * l1v + (1.0 - t) * l2v) <= t * phi(l1v) + (1.0 - t) * phi(l2v) + 1e-9);
    }
  }
}

TEST_CASE("pencil norm matches the boundary norm") {
  Rng rng(46);
  const Disk disk = random_disk(rng);
  const MeroFunction f = random_meromorphic(rng, disk);
  const MeroFunction g = random_meromorphic(rng, disk);
  const PencilNorm phi(f, g);
  const cd lambda{0.3, -0.7};
  CHECK(phi(lambda) == doctest::Approx(norm(linear_combine(f, g, lambda)).norm_total).epsilon(1e-9));
  CHECK(phi.estimate(lambda) <= phi(lambda));
  CHECK(phi.norm_direction() == doctest::Approx(norm(g).norm_total).epsilon(1e-9));
}

TEST_CASE("oracle minimum is reproducible under start rotation") {
  Rng rng(47);
  const Disk disk = random_disk(rng);
  const MeroFunction f = random_meromorphic(rng, disk);
  const MeroFunction g = random_meromorphic(rng, disk);
  OracleOptions rotated;
  rotated.start_rotation = 5;
  const OracleMinimum a = oracle_minimum(f, g);
  const OracleMinimum b = oracle_minimum(f, g, rotated);
  CHECK(std::abs(a.value - b.value) <= 1e-8 * a.reference);
  CHECK(a.value <= a.reference);
}
