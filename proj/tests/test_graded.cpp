#include <doctest.h>

#include "gradsym/graded_form.hpp"
#include "support.hpp"

using namespace gradsym;
using gradsym::test::form;

namespace {

const VectorField ex = VectorField::coordinate(2, 0);
const VectorField ey = VectorField::coordinate(2, 1);

bool all_zero(const GradedOneForm& l) {
  for (const auto& v : l.values)
    if (!v.is_zero()) return false;
  return true;
}

bool all_zero(const GradedTwoForm& t) {
  for (const auto& row : t.values)
    for (const auto& v : row)
      if (!v.is_zero()) return false;
  return true;
}

}  // namespace

TEST_CASE("lambda_g and lambda_w on basic derivations") {
  const ChartGeometry flat = builtin_chart("flat2");
  const GradedOneForm lg = build_lambda(flat, false);
  CHECK(eval_graded(flat, lg, Derivation::insertion(ex)) == form("dx"));
  CHECK(eval_graded(flat, lg, Derivation::lie(ex)).is_zero());
  const GradedOneForm lw = build_lambda_omega(flat);
  CHECK(eval_graded(flat, lw, Derivation::lie(ex)) == form("dy"));
  CHECK(eval_graded(flat, lw, Derivation::insertion(ex)).is_zero());
  CHECK(eval_graded(flat, lw, Derivation::insertion(ey)).is_zero());
}

TEST_CASE("graded differential of a form") {
  const ChartGeometry sphere = builtin_chart("sphere2");
  const Form a = form("x^2*y*dy + x*dx");
  const GradedOneForm da = dG_function(sphere, a);
  CHECK(eval_graded(sphere, da, Derivation::lie(ex)) == lie_derivative(ex, a));
  CHECK(eval_graded(sphere, da, Derivation::insertion(ey)) == form("x^2*y"));
  CHECK(eval_graded(sphere, da, Derivation::exterior(2)) == exterior_derivative(a));
  CHECK(all_zero(dG_graded1(sphere, dG_function(sphere, a))));
  CHECK(all_zero(dG_graded1(sphere, dG_function(sphere, form("x^3/(1+y^2)")))));
}

TEST_CASE("Theta_KS") {
  const ChartGeometry flat = builtin_chart("flat2");
  const GradedTwoForm ks = build_theta_ks(flat);
  CHECK(eval_graded(flat, ks, Derivation::lie(ex), Derivation::insertion(ey)) == form("-1"));
  CHECK(eval_graded(flat, ks, Derivation::lie(ex), Derivation::lie(ey)).is_zero());
  for (const char* name : {"flat2", "halfplane"}) {
    const ChartGeometry c = builtin_chart(name);
    const GradedTwoForm t = build_theta_ks(c);
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) CHECK(t.values[2 + a][2 + b].is_zero());
  }
}

TEST_CASE("Theta_{w,g}") {
  const ChartGeometry flat = builtin_chart("flat2");
  const GradedTwoForm t = build_theta(flat, ThetaVariant::omega_g);
  CHECK(eval_graded(flat, t, Derivation::lie(ex), Derivation::lie(ey)) == form("1"));
  CHECK(eval_graded(flat, t, Derivation::insertion(ex), Derivation::insertion(ey)).is_zero());
  CHECK(eval_graded(flat, t, Derivation::insertion(ex), Derivation::insertion(ex)) == form("1"));

  for (const char* name : {"sphere2", "halfplane", "tlift1q"}) {
    const ChartGeometry c = builtin_chart(name);
    const GradedTwoForm def = build_theta(c, ThetaVariant::omega_g);
    const GradedTwoForm nab = to_basis(c, def, Basis::nabla);
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) {
        CHECK(nab.values[a][2 + b].is_zero());
        CHECK(nab.values[2 + a][2 + b] == Form(2, c.metric()[a][b]));
      }
    CHECK(def == build_theta_closed_form(c));
    CHECK(nab == build_theta_nabla_closed_form(c));
  }
}

TEST_CASE("graded antisymmetry of tabulated 2-forms") {
  const ChartGeometry c = builtin_chart("sphere2");
  for (const GradedTwoForm& t : {build_theta(c, ThetaVariant::omega_g), build_theta_ks(c)}) {
    for (int e = 0; e < 4; ++e)
      for (int f = 0; f < 4; ++f) {
        const int de = basic_degree(2, e), df = basic_degree(2, f);
        const int sign = (de * df) % 2 == 0 ? -1 : 1;
        CHECK(t.values[e][f] == Rational(sign) * t.values[f][e]);
      }
  }
}

TEST_CASE("Theta_{w,g} is d^G-closed on basic triples") {
  const ChartGeometry c = builtin_chart("halfplane");
  const GradedTwoForm t = build_theta(c, ThetaVariant::omega_g);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int e = 0; e < 4; ++e)
        CHECK(dG_graded2(c, t, basic_derivation(c, Basis::lie, a), basic_derivation(c, Basis::lie, b),
                         basic_derivation(c, Basis::lie, e))
                  .is_zero());
}

TEST_CASE("lie derivative along d") {
  const ChartGeometry c = builtin_chart("halfplane");
  const Derivation d = Derivation::exterior(2);
  CHECK(to_basis(c, iota_derivation(c, d, build_theta(c, ThetaVariant::omega_g)), Basis::lie) == build_lambda_omega(c));
  CHECK(to_basis(c, lieG(c, d, build_theta(c, ThetaVariant::omega_g)), Basis::lie) ==
        to_basis(c, build_theta_ks(c), Basis::lie));
}
