#include <doctest.h>

#include <string>

#include "gradsym/brackets.hpp"
#include "support.hpp"

using namespace gradsym;
using gradsym::test::form;
using gradsym::test::scalar;

namespace {

const VectorField ex = VectorField::coordinate(2, 0);
const VectorField ey = VectorField::coordinate(2, 1);

}  // namespace

TEST_CASE("Hamiltonian derivations on the flat plane") {
  const ChartGeometry flat = builtin_chart("flat2");
  HamiltonianSolver even = even_solver(flat);
  // the solver's K^0 is -X_f, and X_x = -d_y
  CHECK(even.derivation(form("x")) == flat.nabla(ey));
  CHECK(even.derivation(form("dx")) == Derivation::insertion(ex));

  const HamiltonianSolution& sdx = even.solve(form("dx"));
  CHECK((!sdx.lie.count(1) || sdx.lie.at(1).is_zero()));

  const RecursionResult k = k_odd(flat, scalar("x^2"), OddRecursionSign::minus);
  VectorValuedForm expected(2, 1);
  expected.set(1, form("2*dx"));
  CHECK(k.components.at(1) == expected);
  CHECK(even.solve(form("2*x*dx")).lie.at(1) == expected);
}

TEST_CASE("even bracket values") {
  const ChartGeometry flat = builtin_chart("flat2");
  HamiltonianSolver even = even_solver(flat);
  CHECK(even_bracket(even, form("x"), form("y")) == form("1"));
  CHECK(even_bracket(even, form("y"), form("x")) == form("-1"));
  CHECK(even_bracket(even, form("dx"), form("dx")) == form("1"));
  CHECK(even_bracket(even, form("dx"), form("dy")).is_zero());

  const ChartGeometry sphere = builtin_chart("sphere2");
  HamiltonianSolver s = even_solver(sphere);
  const Form f = form("x^2*y"), h = form("x + y^3");
  CHECK(even_bracket(s, f, h).part(0) == Form(2, sphere.poisson(scalar("x^2*y"), scalar("x + y^3"))));
}

TEST_CASE("Hamiltonian derivations solve their defining equation") {
  for (const char* name : {"sphere2", "tlift1q"}) {
    const ChartGeometry c = builtin_chart(name);
    HamiltonianSolver even = even_solver(c);
    const std::string u = c.coordinates()[0], v = c.coordinates()[1];
    for (const Form& a : {form(u + "*" + v, c.coordinates()), form(u + "^2*d" + v, c.coordinates())}) {
      const GradedOneForm lhs = to_basis(c, iota_derivation(c, even.derivation(a), even.theta()), Basis::lie);
      CHECK(lhs == dG_function(c, a, Basis::lie));
    }
  }
}

TEST_CASE("Koszul-Schouten bracket") {
  const ChartGeometry flat = builtin_chart("flat2");
  HamiltonianSolver ks = ks_solver(flat);
  const Scalar f = scalar("x^2*y"), h = scalar("y + x*y");
  CHECK(hamiltonian_bracket(ks, Form(2, f), Form(2, h)).is_zero());
  CHECK(ks_bracket_generator(flat, Form(2, f), Form(2, h)).is_zero());

  const Form df = exterior_derivative(Form(2, f)), dh = exterior_derivative(Form(2, h));
  const Form dpoisson = exterior_derivative(Form(2, flat.poisson(f, h)));
  CHECK(ks_bracket_generator(flat, df, dh) == dpoisson);
  CHECK(hamiltonian_bracket(ks, df, dh) == Rational(kKsCalibrationSign) * dpoisson);

  const ChartGeometry halfplane = builtin_chart("halfplane");
  HamiltonianSolver hks = ks_solver(halfplane);
  const Form a = form("x*dy + y^2*dx"), b = form("x^2*y");
  CHECK(hamiltonian_bracket(hks, a, b) == Rational(kKsCalibrationSign) * ks_bracket_generator(halfplane, a, b));
}

TEST_CASE("closed-form brackets on a Kahler chart") {
  const ChartGeometry sphere = builtin_chart("sphere2");
  HamiltonianSolver even = even_solver(sphere);
  const Scalar f = scalar("x*y"), h = scalar("x^2 - y");
  const Form df = exterior_derivative(Form(2, f)), dh = exterior_derivative(Form(2, h));
  CHECK(bracket_fastpath(sphere, FastpathKind::ff, f, h) == even_bracket(even, Form(2, f), Form(2, h)));
  CHECK(bracket_fastpath(sphere, FastpathKind::f_dh, f, h) == even_bracket(even, Form(2, f), dh));
  CHECK(bracket_fastpath(sphere, FastpathKind::df_dh, f, h) == even_bracket(even, df, dh));
  const Form a = form("x*y*dx + y"), b = form("x^2*dy");
  CHECK(bracket_fastpath_general(sphere, a, b) == even_bracket(even, a, b));
}

TEST_CASE("D_w = i_J") {
  for (const char* name : {"flat2", "halfplane", "tlift1"}) {
    const ChartGeometry c = builtin_chart(name);
    HamiltonianSolver even = even_solver(c);
    CHECK(even.derivation(c.omega_form()) == Derivation::insertion(c.j_tensor()));
  }
}
