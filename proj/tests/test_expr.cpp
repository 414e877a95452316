#include <cmath>
#include <numbers>
#include <string>

#include "doctest.h"
#include "mero/error.hpp"
#include "mero/expr.hpp"
#include "mero/random.hpp"

using namespace mero;

namespace {

void check_coeffs(const Polynomial& p, std::initializer_list<cd> expect) {
  REQUIRE(p.size() == expect.size());
  std::size_t k = 0;
  for (cd c : expect) CHECK(std::abs(p[k++] - c) <= 1e-14);
}

}  // namespace

TEST_CASE("parse: variable and the rational test functions") {
  const Expr z = Expr::parse("z");
  CHECK(z(cd{0.3, -2.0}) == cd{0.3, -2.0});
  CHECK(z.to_string() == "z");

  const Expr e1 = Expr::parse("(2*z^4 - z^3 - 8*z + 8)/(2*z^2 - 3*z + 1)");
  const cd at = {0.7, 0.2};
  const cd direct = (2.0 * std::pow(at, 4) - std::pow(at, 3) - 8.0 * at + 8.0) / (2.0 * at * at - 3.0 * at + 1.0);
  CHECK(std::abs(e1(at) - direct) <= 1e-14 * std::abs(direct));

  const Expr e2 = Expr::parse("sin(z - 1)/(z - 1)^2");
  CHECK_FALSE(e2.as_rational().has_value());
  CHECK(std::abs(e2(cd{1.5, 0.0}) - std::sin(0.5) / 0.25) <= 1e-14);
}

TEST_CASE("parse: precedence") {
  CHECK(Expr::parse("-z^2")(2.0) == cd{-4.0});
  CHECK(Expr::parse("2^-1*z")(4.0) == cd{2.0});
  CHECK(Expr::parse("8/2/2")(0.0) == cd{2.0});
  CHECK(Expr::parse("1 - 2 - 3")(0.0) == cd{-4.0});
  CHECK(Expr::parse("z^-2")(2.0) == cd{0.25});
}

TEST_CASE("parse: errors carry offsets and expected tokens") {
  try {
    Expr::parse("z +* 2");
    FAIL("accepted");
  } catch (const ParseError& e) {
    CHECK(e.kind() == ParseError::Kind::syntax);
    CHECK(e.offset() == 3);
    CHECK_FALSE(e.expected().empty());
  }
  try {
    Expr::parse("z^1.5");
    FAIL("accepted");
  } catch (const ParseError& e) {
    CHECK(e.kind() == ParseError::Kind::non_integer_exponent);
  }
  try {
    Expr::parse("z^2000");
    FAIL("accepted");
  } catch (const ParseError& e) {
    CHECK(e.kind() == ParseError::Kind::exponent_range);
  }
  CHECK_THROWS_AS(Expr::parse(""), ParseError);
  CHECK_THROWS_AS(Expr::parse("2z"), ParseError);
  CHECK_THROWS_AS(Expr::parse("log(z)"), ParseError);
  CHECK_THROWS_AS(Expr::parse("(z"), ParseError);
  CHECK_THROWS_AS(Expr::parse(std::string(300, '(') + "z" + std::string(300, ')')), ParseError);
}

TEST_CASE("eval examples") {
  CHECK(Expr::parse("z^2+z+1")(2.0) == cd{7.0});
  const Expr euler = Expr::parse("exp(i*pi)");
  for (cd w : {cd{0.0}, cd{3.0, -1.0}, cd{-7.5, 2.0}}) CHECK(std::abs(euler(w) - cd{-1.0}) <= 1e-14);
  CHECK(std::abs(Expr::parse("e")(0.0) - std::numbers::e) <= 1e-15);
  CHECK(std::abs(Expr::parse("cos(z)^2 + sin(z)^2")(cd{0.4, 0.9}) - cd{1.0}) <= 1e-14);
}

TEST_CASE("eval errors") {
  try {
    Expr::parse("1/(z - 1)")(1.0);
    FAIL("no error");
  } catch (const EvalError& e) {
    CHECK(e.kind() == EvalError::Kind::pole_hit);
  }
  try {
    Expr::parse("exp(exp(z))")(10.0);
    FAIL("no error");
  } catch (const EvalError& e) {
    CHECK(e.kind() == EvalError::Kind::non_finite);
  }
}

TEST_CASE("as_rational examples") {
  const auto r = Expr::parse("(2*z^4-z^3-8*z+8)/(2*z^2-3*z+1)").as_rational();
  REQUIRE(r);
  check_coeffs(r->numerator, {8.0, -8.0, 0.0, -1.0, 2.0});
  check_coeffs(r->denominator, {1.0, -3.0, 2.0});

  const auto id = Expr::parse("z").as_rational();
  REQUIRE(id);
  check_coeffs(id->numerator, {0.0, 1.0});
  check_coeffs(id->denominator, {1.0});

  CHECK_FALSE(Expr::parse("exp(z)").as_rational());
  CHECK(Expr::parse("z^-2 + 1").as_rational().has_value());
}

TEST_CASE("property: rational round trip and as_rational soundness") {
  Rng root(11);
  int checked = 0;
  for (int i = 0; i < 1000; ++i) {
    Rng rng = root.split(i);
    const Expr e = Expr::parse(random_rational_text(rng, 3));
    const auto rat = e.as_rational();
    REQUIRE(rat);
    // The printed form parses back to the same function.
    const Expr again = Expr::parse(e.to_string());
    for (int k = 0; k < 20; ++k) {
      const cd z = 2.0 * rng.complex_normal();
      cd direct;
      try {
        direct = e(z);
      } catch (const EvalError&) {
        continue;
      }
      const cd den = rat->denominator(z);
      if (std::abs(den) < 1e-8 || std::abs(direct) > 1e8) continue;
      const cd viaq = rat->numerator(z) / den;
      CHECK(std::abs(viaq - direct) <= 1e-10 * (1.0 + std::abs(viaq)));
      CHECK(std::abs(again(z) - direct) <= 1e-12 * (1.0 + std::abs(direct)));
      ++checked;
    }
  }
  CHECK(checked > 10000);
}

TEST_CASE("property: parser totality") {
  const std::string alphabet = "z+-*/^()0123456789.ipesxncol ,";
  Rng rng(5);
  int rejected = 0;
  for (int i = 0; i < 5000; ++i) {
    std::string text;
    const int len = rng.integer(1, 24);
    for (int k = 0; k < len; ++k) text += alphabet[static_cast<std::size_t>(rng.integer(0, static_cast<int>(alphabet.size()) - 1))];
    try {
      Expr::parse(text);
    } catch (const ParseError& e) {
      CHECK(e.offset() <= text.size());
      ++rejected;
    }
  }
  CHECK(rejected > 0);
}

TEST_CASE("additive terms reassemble the expression") {
  const Expr e = Expr::parse("exp(z) - 1/(z - 2) + z^2");
  const auto terms = e.additive_terms();
  CHECK(terms.size() == 3);
  const Expr sum = Expr::sum(terms);
  const cd z{0.3, 0.4};
  CHECK(std::abs(sum(z) - e(z)) <= 1e-14 * std::abs(e(z)));
}
