#include <algorithm>
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "mero/catalog.hpp"
#include "mero/error.hpp"
#include "mero/random.hpp"
#include "mero/smooth.hpp"

using namespace mero;

namespace {

MeroFunction catalog(const char* name) { return load_function(catalog_entry(name).file); }

MeroFunction parse_on(const char* text, const Disk& disk) { return from_expr(Expr::parse(text), disk); }

bool has_reason(const SmoothVerdict& v, SmoothReason r) {
  return std::find(v.reasons.begin(), v.reasons.end(), r) != v.reasons.end();
}

}  // namespace

TEST_CASE("classify: regression functions") {
  const SmoothVerdict e1 = classify(catalog("quartic-over-quadratic"));
  CHECK(e1.status == SmoothStatus::smooth);
  CHECK(e1.reason == SmoothReason::singleton_product);

  const SmoothVerdict e3 = classify(catalog("septic-over-quintic"));
  CHECK(e3.status == SmoothStatus::not_smooth);
  CHECK(e3.reason == SmoothReason::non_singleton_r);
  CHECK(e3.q.kind == AttainmentKind::whole_disk);
  CHECK(has_reason(e3, SmoothReason::constant_component));

  const SmoothVerdict e4 = classify(catalog("exp-quotient"));
  CHECK(e4.status == SmoothStatus::not_smooth);
  CHECK(e4.reason == SmoothReason::non_singleton_q);
  CHECK(e4.q.kind == AttainmentKind::whole_boundary);

  CHECK(classify(catalog("sine-over-square")).status == SmoothStatus::not_smooth);
  CHECK(classify(catalog("cubic-over-square")).status == SmoothStatus::smooth);
  CHECK(classify(catalog("double-exp-rescaled")).status == SmoothStatus::smooth);
}

TEST_CASE("classify: polynomial quotient and shifted sine") {
  const SmoothVerdict a = classify(parse_on("z^2 + 3", Disk(0.0, 1.0)));
  CHECK(a.status == SmoothStatus::not_smooth);
  CHECK(a.q.kind == AttainmentKind::whole_disk);

  const SmoothVerdict b = classify(parse_on("(z + 1)/(z - 1/2)", Disk(0.0, 2.0)));
  CHECK(b.status == SmoothStatus::not_smooth);
  CHECK(b.r.kind == AttainmentKind::whole_disk);
  CHECK(has_reason(b, SmoothReason::constant_component));

  CHECK(classify(parse_on("((z + 1)*(z^2 + 1))/z^2", Disk(0.0, 0.5))).status == SmoothStatus::smooth);
}

TEST_CASE("classify rejects the zero function") {
  CHECK_THROWS_AS(classify(MeroFunction::zero(Disk(0.0, 1.0))), IllPosedError);
}

TEST_CASE("directional derivative oracle") {
  const DirectionalSummary smooth = directional_derivative_oracle(catalog("quartic-over-quadratic"), 32, 7);
  CHECK(smooth.directions == 32);
  CHECK(smooth.agreement);
  CHECK(smooth.max_gap <= kAgreementGap);

  const DirectionalSummary kink = directional_derivative_oracle(catalog("septic-over-quintic"), 32, 7);
  CHECK(kink.kink_found);
  CHECK(kink.max_gap > kKinkGap);

  // A direction that raises f_R at 2 and not at -2 exposes the kink directly.
  const MeroFunction f = catalog("septic-over-quintic");
  const MeroFunction g = parse_on("z + 2", f.disk());
  CHECK(directional_gap(f, g, 0.0) > kKinkGap);
}

TEST_CASE("witness pairs") {
  const MeroFunction f = catalog("septic-over-quintic");
  const WitnessPair w = build_witness(f);
  CHECK(w.valid);
  CHECK(w.split_component == 'R');
  CHECK(w.checks[0].orthogonal());
  CHECK(w.checks[1].orthogonal());
  CHECK_FALSE(w.checks[2].orthogonal());
  REQUIRE(w.checks[2].lambda);
  CHECK(*w.checks[2].lambda == cd{-1.0});
  CHECK(w.sum_residual <= 1e-9);
  Rng rng(3);
  for (int k = 0; k < 50; ++k) {
    const cd z = rng.in_disk(f.disk(), 0.95);
    const cd fz = f(z);
    if (!std::isfinite(std::abs(fz)) || std::abs(fz) > 1e6) continue;
    CHECK(std::abs(w.g1(z) + w.g2(z) - fz) <= 1e-9 * (1.0 + std::abs(fz)));
  }

  const WitnessPair w4 = build_witness(catalog("exp-quotient"));
  CHECK(w4.valid);
  CHECK(w4.split_component == 'Q');

  try {
    build_witness(catalog("quartic-over-quadratic"));
    FAIL("no error");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()) == "witness requested for smooth function");
  }
}

TEST_CASE("corollary suites") {
  const CorollaryReport r = corollary_suite(99);
  CHECK(r.parts[0].instances == 50);
  CHECK(r.parts[1].instances == 50);
  CHECK(r.parts[2].instances == 25);
  CHECK(r.parts[3].instances == 25);
  for (const auto& p : r.parts) {
    CAPTURE(p.name);
    CHECK(p.passed());
  }
  CHECK(r.passed());
}

TEST_CASE("property: verdicts are invariant under scaling and grid rotation") {
  Rng root(51);
  std::vector<MeroFunction> fs;
  for (const auto& e : regression_catalog()) fs.push_back(load_function(e.file));
  for (int i = 0; i < 20; ++i) {
    Rng rng = root.split(i);
    fs.push_back(random_meromorphic(rng, random_disk(rng)));
  }
  Rng rng(52);
  for (const auto& f : fs) {
    const SmoothVerdict base = classify(f);
    const cd c = rng.complex_normal();
    const SmoothVerdict scaled = classify(linear_combine(MeroFunction::zero(f.disk()), f, c));
    CHECK(scaled.status == base.status);
    CHECK(scaled.q.kind == base.q.kind);
    CHECK(scaled.r.kind == base.r.kind);
    BoundaryOptions turned;
    turned.phase = rng.uniform(0.0, 1e-3);
    const SmoothVerdict rotated = classify(f, turned);
    CHECK(rotated.status == base.status);
    if (base.status != SmoothStatus::inconclusive)
      CHECK((base.status == SmoothStatus::smooth) == (base.q.is_singleton() && base.r.is_singleton()));
  }
}
