#include <doctest.h>

#include <vector>

#include "support.hpp"

using namespace gradsym;
using gradsym::test::field;
using gradsym::test::form;

namespace {

const VectorField dx_field = VectorField::coordinate(2, 0);
const VectorField dy_field = VectorField::coordinate(2, 1);

}  // namespace

TEST_CASE("wedge is graded commutative") {
  CHECK(wedge(form("dx"), form("dx")).is_zero());
  CHECK(wedge(form("dx"), form("dy")) == -wedge(form("dy"), form("dx")));
  CHECK(wedge(form("x*dy"), form("y*dx")) == form("-x*y*dx^dy"));
  CHECK(form("dx^dx").is_zero());
}

TEST_CASE("exterior derivative") {
  CHECK(exterior_derivative(form("x*dy")) == form("dx^dy"));
  const Form a = form("x^2*y/(1+y^2)*dx + x*y^3*dy");
  CHECK(exterior_derivative(exterior_derivative(form("x^3*y/(1+x)"))).is_zero());
  CHECK(exterior_derivative(exterior_derivative(a)).is_zero());
  CHECK(exterior_derivative(form("x*y*dx^dy")).is_zero());
}

TEST_CASE("interior and Lie derivatives") {
  CHECK(insert_vector(dx_field, form("dx^dy")) == form("dy"));
  CHECK(insert_vector(field({"0", "x"}), form("dy")) == form("x"));
  CHECK(lie_derivative(dx_field, form("x*dy")) == form("dy"));
}

TEST_CASE("vector-valued forms") {
  const Form a = form("x*dx^dy");
  CHECK(insert_vvform(VectorValuedForm::identity(2), a) == 2 * a);
  CHECK(insert_vvform(VectorValuedForm::identity(2), form("y*dx + dy")) == form("y*dx + dy"));
  CHECK(Derivation::lie(VectorValuedForm::identity(2)) == Derivation::exterior(2));

  const ChartGeometry flat = builtin_chart("flat2");
  CHECK(insert_vvform(flat.j_tensor(), form("dx")) == form("-dy"));
  CHECK(flat.nabla(dx_field).apply(form("y*dx")).is_zero());
}

TEST_CASE("graded commutators of derivations") {
  const Derivation d = Derivation::exterior(2);
  CHECK(commutator(Derivation::lie(dx_field), Derivation::insertion(dy_field)).is_zero());
  CHECK(commutator(d, d).is_zero());

  const VectorField x = field({"x*y", "y^2"});
  const VectorField y = field({"1", "x"});
  CHECK(commutator(Derivation::lie(x), Derivation::insertion(y)) == Derivation::insertion(lie_bracket(x, y)));
  CHECK(commutator(Derivation::lie(x), Derivation::lie(y)) == Derivation::lie(lie_bracket(x, y)));
  CHECK(commutator(d, Derivation::insertion(x)) == Derivation::lie(x));

  const Derivation a = Derivation::insertion(x);
  const Derivation b = Derivation::lie(y);
  const Derivation c = d;
  // graded Jacobi: [a,[b,c]] = [[a,b],c] + (-1)^{|a||b|} [b,[a,c]], |a| = -1, |b| = 0
  CHECK(commutator(a, commutator(b, c)) == commutator(commutator(a, b), c) + commutator(b, commutator(a, c)));
}

TEST_CASE("derivations obey the graded Leibniz rule") {
  const Derivation i = Derivation::insertion(field({"x", "1+y"}));
  const Form a = form("x*dx + y^2*dy");
  const Form b = form("x*y*dy");
  CHECK(i.apply(wedge(a, b)) == wedge(i.apply(a), b) - wedge(a, i.apply(b)));
  const Derivation d = Derivation::exterior(2);
  CHECK(d.apply(wedge(a, b)) == wedge(d.apply(a), b) - wedge(a, d.apply(b)));
}

TEST_CASE("normal form round trip") {
  const Derivation d = Derivation::exterior(2);
  CHECK(Derivation::from_action(2, [&](const Form& a) { return d.apply(a); }) == d);
  const Derivation mixed = Derivation::lie(field({"x^2", "y"})) + Derivation::insertion(field({"1", "x*y"}));
  CHECK(Derivation::from_action(2, [&](const Form& a) { return mixed.apply(a); }) == mixed);
}
