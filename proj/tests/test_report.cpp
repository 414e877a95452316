#include <cmath>
#include <cstring>

#include "doctest.h"
#include "mero/catalog.hpp"
#include "mero/error.hpp"
#include "mero/random.hpp"
#include "mero/report.hpp"
#include "mero/smooth.hpp"

using namespace mero;

TEST_CASE("function file: parse and format") {
  const FunctionFile f = parse_function_file(
      "# fourth test function\n"
      "disk 0 0 1\n"
      "\n"
      "expr exp(pi*i*z)/(exp(pi*i*z) - 1)\n"
      "pole 0 0 2\n");
  CHECK(f.disk == Disk(0.0, 1.0));
  CHECK(f.expr == "exp(pi*i*z)/(exp(pi*i*z) - 1)");
  REQUIRE(f.poles.size() == 1);
  CHECK(f.poles[0].max_order == 2);
  CHECK_FALSE(f.rescaled);

  const FunctionFile again = parse_function_file(format_function_file(f));
  CHECK(again.disk == f.disk);
  CHECK(again.expr == f.expr);
  CHECK(again.poles.size() == 1);

  const FunctionFile r = parse_function_file("disk 0.5 -1 2\nexpr z\nrescaled inner exponent divided by 1000\n");
  REQUIRE(r.rescaled);
  CHECK(*r.rescaled == "inner exponent divided by 1000");
}

TEST_CASE("function file: errors carry line numbers") {
  auto line_of = [](const char* text) -> std::size_t {
    try {
      parse_function_file(text);
    } catch (const FileFormatError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("disk 0 0 1\nexpr z\nbogus 1\n") == 3);
  CHECK(line_of("disk 0 0\nexpr z\n") == 1);
  CHECK(line_of("disk 0 0 x\nexpr z\n") == 1);
  CHECK(line_of("expr z\ndisk 0 0 1\n") == 1);
  CHECK(line_of("disk 0 0 1\nexpr z\n\npole 1 0 0\n") == 4);
  CHECK(line_of("disk 0 0 1\n") != 0);
  CHECK(line_of("expr z\n") != 0);
  CHECK_THROWS_AS(parse_function_file("disk 0 0 -1\nexpr z\n"), Error);
}

TEST_CASE("function file: a constructed function survives the text form") {
  Rng rng(61);
  for (int i = 0; i < 10; ++i) {
    const Disk disk = random_disk(rng);
    const MeroFunction f = random_meromorphic(rng, disk);
    const MeroFunction g = load_function(parse_function_file(format_function_file(to_function_file(f))));
    CHECK(g.parts().size() == f.parts().size());
    for (int k = 0; k < 20; ++k) {
      const cd z = rng.in_disk(disk, 1.0);
      CHECK(std::abs(f(z) - g(z)) <= 1e-10 * (1.0 + std::abs(f(z))));
    }
  }
  const WitnessPair w = build_witness(load_function(catalog_entry("exp-quotient").file));
  const MeroFunction g1 = load_function(parse_function_file(format_function_file(to_function_file(w.g1))));
  for (cd z : {cd{0.3, 0.2}, cd{-0.5, 0.5}}) CHECK(std::abs(g1(z) - w.g1(z)) <= 1e-9 * (1.0 + std::abs(w.g1(z))));
}

TEST_CASE("json: numbers round trip bit for bit") {
  Rng rng(62);
  for (int i = 0; i < 1000; ++i) {
    const cd c{rng.normal() * std::pow(10.0, rng.integer(-300, 300)), rng.normal()};
    const cd back = complex_from_json(json::parse(to_json(c).dump()));
    CHECK(std::memcmp(&back, &c, sizeof c) == 0);
  }
}

TEST_CASE("json: attainment sets round trip") {
  for (const auto& e : regression_catalog()) {
    const SmoothVerdict v = classify(load_function(e.file));
    for (const AttainmentSet* s : {&v.q, &v.r}) {
      const json j = to_json(*s);
      const AttainmentSet back = attainment_from_json(json::parse(j.dump()));
      CHECK(back.kind == s->kind);
      CHECK(back.sup_value == s->sup_value);
      CHECK(back.value_tol == s->value_tol);
      CHECK(back.margin == s->margin);
      REQUIRE(back.points.size() == s->points.size());
      for (std::size_t k = 0; k < back.points.size(); ++k) CHECK(back.points[k].theta == s->points[k].theta);
      CHECK(to_json(back).dump() == j.dump());
    }
  }
}

TEST_CASE("json: reports are deterministic apart from the timestamp") {
  auto build = [] {
    const CatalogEntry& e = catalog_entry("septic-over-quintic");
    json j = report_header("smooth", 42);
    j["input"] = to_json(e.file);
    const MeroFunction f = load_function(e.file);
    j["decomposition"] = decomposition_json(f);
    SmoothVerdict v = classify(f);
    v.oracle = directional_derivative_oracle(f, 8, 42);
    j["smooth"] = to_json(v);
    return j;
  };
  const json a = build();
  CHECK(a.at("schema") == 1);
  CHECK(a.contains("timestamp"));
  CHECK_FALSE(strip_timestamp(a).contains("timestamp"));
  CHECK(strip_timestamp(a).dump() == strip_timestamp(build()).dump());
}

TEST_CASE("json: rescaled input is flagged") {
  const json j = to_json(catalog_entry("double-exp-rescaled").file);
  CHECK(j.at("rescaled").is_string());
  CHECK(to_json(catalog_entry("quartic-over-quadratic").file).at("rescaled").is_null());
}
