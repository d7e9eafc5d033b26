#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"
#include "pbv/errors.hpp"
#include "pbv/io.hpp"
#include "random.hpp"

using namespace pbv;
using fixtures::p;

TEST_CASE("document parsing with defaults") {
  auto doc = parse_document("[ring]\n"
                            "generators = x, y\n"
                            "\n"
                            "[poisson]\n"
                            "{x,y} = x*y  # log-symplectic on the axes\n");
  auto R = doc.structure.pres;
  CHECK(R->gen_names() == std::vector<std::string>{"x", "y"});
  CHECK(R->smooth_dim() == 2);
  CHECK(R->rules().empty());
  CHECK(R->E(0, 0) == p(R, "1"));
  CHECK(R->E(0, 1) == p(R, "0"));
  CHECK(R->volume_a().at(Subset{0, 1}) == p(R, "1"));
  CHECK(doc.structure.table.at({0, 1}) == p(R, "x*y"));
  CHECK(validate_poisson(doc.structure).passed);
}

TEST_CASE("quotient presentations parse with relations and volume data") {
  auto doc = parse_document("[ring]\n"
                            "generators = x, y, z\n"
                            "smooth_dim = 2\n"
                            "relation = z^2 -> 1 - x^2 - y^2\n"
                            "[dual_basis]\n"
                            "E[x][x] = 1 - x^2\n"
                            "E[x][y] = -x*y\n"
                            "E[x][z] = -x*z\n"
                            "E[y][x] = -x*y\n"
                            "E[y][y] = 1 - y^2\n"
                            "E[y][z] = -y*z\n"
                            "E[z][x] = -x*z\n"
                            "E[z][y] = -y*z\n"
                            "E[z][z] = 1 - z^2\n"
                            "[volume]\n"
                            "a[y,z] = x\n"
                            "a[x,z] = -y\n"
                            "a[x,y] = z\n"
                            "b[y,z] = x\n"
                            "b[x,z] = -y\n"
                            "b[x,y] = z\n"
                            "[poisson]\n"
                            "{x,y} = z\n"
                            "{y,z} = x\n"
                            "{z,x} = y\n");
  auto R = doc.structure.pres;
  CHECK(R->validate().passed);
  CHECK(validate_poisson(doc.structure).passed);
  // {z,x} = y was normalized to {x,z} = -y
  CHECK(doc.structure.table.at({0, 2}) == p(R, "-y"));
  // the parsed presentation behaves like the reference fixture
  auto S = fixtures::sphere();
  CHECK(R->normal_form(p(R, "z^3")).to_string(R->gen_names()) ==
        S->normal_form(p(S, "z^3")).to_string(S->gen_names()));
}

TEST_CASE("parse errors carry document positions") {
  CHECK_THROWS_AS(parse_document("generators = x\n"), ParseError);
  try {
    parse_document("[ring]\ngenerators = x, y\n[poisson]\n{x,w} = 1\n");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.line == 4);
    CHECK(e.column == 4);
  }
  try {
    parse_document("[ring]\ngenerators = x, y\n[poisson]\n{x,y} = 1 + $\n");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.line == 4);
  }
  CHECK_THROWS_AS(parse_document("[ring]\ngenerators = x, y\nrelation = 2*x -> y\n"), ParseError);
  CHECK_THROWS_AS(parse_document("[bogus]\n"), ParseError);
  CHECK_THROWS_AS(parse_document("[ring]\ngenerators = x, y\n[poisson]\n{x,x} = 1\n"), ParseError);
  CHECK_THROWS_AS(load_document("/nonexistent/file.pois"), ParseError);
}

TEST_CASE("expression parsing") {
  auto R = fixtures::space();
  auto F = parse_multivector(R, "(x^2) (d x)* ^ (d y)* + (-1/2) (d y)* ^ (d z)*");
  Multivector expect(R, 2);
  expect.add(Subset{0, 1}, p(R, "x^2"));
  expect.add(Subset{1, 2}, p(R, "-1/2"));
  CHECK(F == expect);
  // unordered factors pick up the permutation sign; repeats vanish
  CHECK(parse_multivector(R, "(x) (d y)* ^ (d x)*") ==
        Rational(-1) * parse_multivector(R, "(x) (d x)* ^ (d y)*"));
  CHECK(parse_kform(R, "(x) d y ^ d y + (0) d x ^ d z").is_zero());
  CHECK(parse_multivector(R, "0").is_zero());
  CHECK(parse_kform(R, "(7)").deg == 0);

  CHECK_THROWS_AS(parse_multivector(R, "(x) (d x)* + (y) (d x)* ^ (d y)*"), ParseError);
  CHECK_THROWS_AS(parse_multivector(R, "(x) d x"), ParseError);
  CHECK_THROWS_AS(parse_kform(R, "(x) (d x)*"), ParseError);
  CHECK_THROWS_AS(parse_kform(R, "(x"), ParseError);
}

TEST_CASE("rendered values parse back to themselves") {
  testing::Rng rng(191);
  for (auto R : {fixtures::plane(), fixtures::space(), fixtures::sphere()}) {
    for (unsigned d = 0; d <= R->smooth_dim(); ++d)
      for (int i = 0; i < 10; ++i) {
        auto F = rng.mv(R, d);
        if (!F.is_zero()) CHECK(parse_multivector(R, F.to_string()) == F);
        auto w = rng.form(R, d);
        if (!w.is_zero()) CHECK(parse_kform(R, w.to_string()) == w);
      }
  }
}
