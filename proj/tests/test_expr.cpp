#include <doctest.h>

#include <cmath>

#include "qhlab/expr.hpp"

using namespace qhlab;

TEST_CASE("arithmetic and precedence") {
  CHECK(Expr::parse("1+2*3").eval(0, 0) == doctest::Approx(7.0));
  CHECK(Expr::parse("(1+2)*3").eval(0, 0) == doctest::Approx(9.0));
  CHECK(Expr::parse("2^3^2").eval(0, 0) == doctest::Approx(512.0));  // right assoc
  CHECK(Expr::parse("-x^2").eval(3, 0) == doctest::Approx(-9.0));
  CHECK(Expr::parse("6/3/2").eval(0, 0) == doctest::Approx(1.0));
}

TEST_CASE("variables and functions") {
  CHECK(Expr::parse("x*y").eval(2, 5) == doctest::Approx(10.0));
  CHECK(Expr::parse("r").eval(3, 4) == doctest::Approx(5.0));
  CHECK(Expr::parse("exp(log(7))").eval(0, 0) == doctest::Approx(7.0));
  CHECK(Expr::parse("sqrt(abs(-16))").eval(0, 0) == doctest::Approx(4.0));
  CHECK(Expr::parse("min(x, y) + max(x, y)").eval(2, 9) == doctest::Approx(11.0));
  CHECK(Expr::parse("1/(d^2)").eval(0, 0, 0.5) == doctest::Approx(4.0));
}

TEST_CASE("distance detection") {
  CHECK(Expr::parse("d^2").uses_distance());
  CHECK_FALSE(Expr::parse("x+y").uses_distance());
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(Expr::parse("1 +"), std::invalid_argument);
  CHECK_THROWS_AS(Expr::parse("foo(3)"), std::invalid_argument);
  CHECK_THROWS_AS(Expr::parse("min(1)"), std::invalid_argument);
  CHECK_THROWS_AS(Expr::parse("(1+2"), std::invalid_argument);
  CHECK_THROWS_AS(Expr::parse("1 2"), std::invalid_argument);
}
