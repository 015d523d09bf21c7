#include "doctest.h"
#include "support/fixtures.hpp"
#include "ternalg/errors.hpp"
#include "ternalg/scalar.hpp"

using namespace ternalg;
using fixtures::q;
using fixtures::s5;

TEST_CASE("scalar arithmetic examples") {
  CHECK(q(1, 5) + s5(2, 5) == QuadScalar(Rational(1, 5), Rational(2, 5), 5));
  CHECK(QuadScalar::sqrt(5) * QuadScalar::sqrt(5) == QuadScalar(5));
  CHECK((1 + QuadScalar::sqrt(5)) * (-1 + QuadScalar::sqrt(5)) == QuadScalar(4));
  CHECK((QuadScalar::sqrt(5) * QuadScalar::sqrt(5)).is_rational());
}

TEST_CASE("scalar inverse") {
  CHECK(QuadScalar(2).inverse() == q(1, 2));
  const QuadScalar x = 1 + QuadScalar::sqrt(5);
  CHECK(x.inverse() == q(-1, 4) + s5(1, 4));
  CHECK(x * x.inverse() == QuadScalar(1));
  CHECK_THROWS_AS(QuadScalar(0).inverse(), DivisionByZero);
  CHECK_THROWS_AS(QuadScalar(1) / QuadScalar(0), DivisionByZero);
}

TEST_CASE("rationals embed into every quadratic field, irrationals do not mix") {
  const QuadScalar r2 = QuadScalar::sqrt(2), r5 = QuadScalar::sqrt(5);
  CHECK_NOTHROW(r2 + QuadScalar(3));
  CHECK_NOTHROW(r5 * q(1, 7));
  CHECK_THROWS_AS(r2 + r5, DomainError);
  CHECK_THROWS_AS(r2 * r5, DomainError);
  CHECK((r5 - r5).radicand() == 1);
  CHECK((r5 - r5) == QuadScalar(0));
  CHECK_THROWS_AS(QuadScalar(0, 1, 4), DomainError);
}

TEST_CASE("norm and conjugate") {
  const QuadScalar x = 3 + 2 * QuadScalar::sqrt(5);
  CHECK(x.norm() == Rational(9 - 20));
  CHECK(x * x.conjugate() == QuadScalar(x.norm()));
}

TEST_CASE("canonical strings") {
  CHECK(QuadScalar(0).str() == "0");
  CHECK(q(-3, 5).str() == "-3/5");
  CHECK(q(6, 10).str() == "3/5");
  CHECK(QuadScalar::sqrt(5).str() == "sqrt(5)");
  CHECK(s5(-1).str() == "-1*sqrt(5)");
  CHECK(s5(1, 5).str() == "1/5*sqrt(5)");
  CHECK((1 + 2 * QuadScalar::sqrt(5)).str() == "1+2*sqrt(5)");
  CHECK((1 - QuadScalar::sqrt(5)).str() == "1-sqrt(5)");
  CHECK((q(1, 2) - s5(3, 4)).str() == "1/2-3/4*sqrt(5)");
}

TEST_CASE("scalar literal grammar") {
  CHECK(parse_scalar("2") == QuadScalar(2));
  CHECK(parse_scalar("-3/5") == q(-3, 5));
  CHECK(parse_scalar("4/6") == q(2, 3));
  CHECK(parse_scalar("1/5*sqrt(5)") == s5(1, 5));
  CHECK(parse_scalar("1+2*sqrt(5)") == 1 + s5(2));
  CHECK(parse_scalar("sqrt(5)") == QuadScalar::sqrt(5));
  CHECK(parse_scalar(" 1 - sqrt(5) ") == 1 - QuadScalar::sqrt(5));
  CHECK(parse_scalar("sqrt(2)", 2) == QuadScalar::sqrt(2));
  CHECK(parse_scalar("-2/3*sqrt(7)+1", 7) == QuadScalar(Rational(1), Rational(-2, 3), 7));
  CHECK_THROWS_AS(parse_scalar("1/0"), ParseError);
  CHECK_THROWS_AS(parse_scalar("sqrt(3)"), ParseError);
  CHECK_THROWS_AS(parse_scalar(""), ParseError);
  CHECK_THROWS_AS(parse_scalar("1+2+3"), ParseError);
  CHECK_THROWS_AS(parse_scalar("x"), ParseError);
  CHECK_THROWS_AS(parse_scalar("1/-2"), ParseError);
  CHECK_THROWS_AS(parse_scalar("2", 4), DomainError);
}

TEST_CASE("canonical strings parse back to the same value") {
  for (const QuadScalar& x : {QuadScalar(0), q(-3, 5), s5(1, 5), s5(-1), 1 + s5(2), 1 - s5(1), q(7, 3) - s5(9, 2)}) {
    CHECK(parse_scalar(x.str()) == x);
  }
}
