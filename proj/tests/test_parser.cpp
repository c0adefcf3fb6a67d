#include <doctest.h>

#include <vector>

#include "gradsym/errors.hpp"
#include "support.hpp"

using namespace gradsym;
using gradsym::test::form;
using gradsym::test::scalar;
using gradsym::test::xy;

TEST_CASE("form expressions") {
  CHECK(form("x*dx^dy") == Form::monomial(2, 0b11, scalar("x")));
  CHECK(form("1/(1+x^2)") == Form(2, RationalFunction::fraction(Polynomial(2, 1), scalar("1+x^2").numerator())));
  CHECK(form("dx^dx").is_zero());
  CHECK(form("dy^dx") == -form("dx^dy"));
  CHECK(form("d(x*y)") == form("y*dx + x*dy"));
  CHECK(form("2*x^3 - x^3") == form("x^3"));
  CHECK(form("x - y - x") == form("-y"));
  CHECK(form("x/y/x") == form("1/y"));
  CHECK(form("(x+y)^2") == form("x^2 + 2*x*y + y^2"));
}

TEST_CASE("parse errors carry a column") {
  auto column_of = [](const char* text) {
    try {
      parse_form_expr(text, xy());
    } catch (const ParseError& e) {
      return e.column();
    }
    return 0;
  };
  CHECK(column_of("x + * y") == 5);
  CHECK(column_of("x + z") == 5);
  CHECK(column_of("(x + y") > 0);
  CHECK(column_of("x $ y") == 3);
  CHECK(column_of("") > 0);
  CHECK_THROWS_AS(parse_scalar_expr("x*dy", xy()), ParseError);
  CHECK_THROWS_AS(parse_form_expr("1/dx", xy()), ParseError);

  try {
    parse_form_expr("x + z", xy(), 7, 10);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 7);
    CHECK(e.column() == 15);
  }
}

TEST_CASE("division by zero inside an expression") {
  CHECK_THROWS(parse_form_expr("1/(x-x)", xy()));
}
