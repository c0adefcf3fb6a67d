#include <doctest.h>

#include <vector>

#include "gradsym/errors.hpp"
#include "support.hpp"

using namespace gradsym;
using gradsym::test::scalar;

TEST_CASE("rational functions cancel to lowest terms") {
  CHECK(scalar("x/(1+y)") * scalar("1+y") == scalar("x"));
  CHECK(scalar("1/x") + scalar("1/x") == scalar("2/x"));
  CHECK((scalar("x") - scalar("x")).is_zero());
  CHECK(scalar("(x^2-y^2)/(x-y)") == scalar("x+y"));
  CHECK(scalar("(2*x+2)/(4*x+4*y)").denominator() == scalar("x+y").numerator());
}

TEST_CASE("division by zero is a domain error") {
  CHECK_THROWS_AS(scalar("1") / Scalar(2), DomainError);
  CHECK_THROWS_AS(RationalFunction::fraction(Polynomial(2, 1), Polynomial(2)), DomainError);
}

TEST_CASE("partial derivatives") {
  CHECK(scalar("x^2*y").partial(0) == scalar("2*x*y"));
  CHECK(scalar("1/(1+x^2)").partial(0) == scalar("-2*x/(1+x^2)^2"));
  CHECK(scalar("x").partial(1).is_zero());
  const Scalar f = scalar("x^3*y/(1+x*y)");
  CHECK(f.partial(0).partial(1) == f.partial(1).partial(0));
}

TEST_CASE("point evaluation is exact") {
  const std::vector<Rational> p{2, 3};
  CHECK(scalar("x^2+y").evaluate(p) == 7);
  CHECK(scalar("x/y").evaluate(p) == Rational(2, 3));
  const std::vector<Rational> origin{0, 0};
  CHECK_THROWS_AS(scalar("1/x").evaluate(origin), EvaluationError);
}

TEST_CASE("polynomial gcd is monic") {
  const Polynomial a = scalar("2*x^2 - 2").numerator();
  const Polynomial b = scalar("3*x + 3").numerator();
  CHECK(gcd(a, b) == scalar("x+1").numerator());
  CHECK(gcd(Polynomial(2), Polynomial(2)).is_zero());
}
