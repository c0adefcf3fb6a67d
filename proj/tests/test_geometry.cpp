#include <doctest.h>

#include <vector>

#include "gradsym/errors.hpp"
#include "support.hpp"

using namespace gradsym;
using gradsym::test::form;
using gradsym::test::scalar;

namespace {

bool squares_to(const Matrix& j, int sign) {
  const int n = static_cast<int>(j.size());
  const Matrix sq = multiply(j, j);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (!(sq[a][b] == Scalar(n, Rational(a == b ? sign : 0)))) return false;
  return true;
}

VectorField apply_j(const ChartGeometry& c, const VectorField& x) {
  VectorField out(c.dim());
  for (int b = 0; b < c.dim(); ++b)
    for (int j = 0; j < c.dim(); ++j) out[b] += c.j_matrix()[b][j] * x[j];
  return out;
}

}  // namespace

TEST_CASE("Christoffel symbols") {
  const ChartGeometry flat = builtin_chart("flat2");
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) CHECK(flat.christoffel(i, j, k).is_zero());
  CHECK(builtin_chart("halfplane").christoffel(0, 0, 1) == scalar("-1/y"));
  CHECK(builtin_chart("sphere2").christoffel(0, 0, 0) == scalar("-2*x/(1+x^2+y^2)"));
}

TEST_CASE("curvature") {
  const ChartGeometry flat = builtin_chart("flat4");
  for (const auto& row : flat.curvature_forms())
    for (const auto& f : row) CHECK(f.is_zero());

  for (const char* name : {"sphere2", "halfplane", "sphere2x2"}) {
    const ChartGeometry c = builtin_chart(name);
    const int n = c.dim();
    bool bianchi = true;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int x = 0; x < n; ++x)
          for (int y = 0; y < n; ++y)
            bianchi = bianchi && (c.curvature(a, b, x, y) + c.curvature(a, x, y, b) + c.curvature(a, y, b, x)).is_zero();
    CHECK_MESSAGE(bianchi, name);
  }
  // unit sphere, K = 1: R(d_x, d_y, d_x, d_y) = g(R(d_x, d_y) d_y, d_x) = K det g
  const ChartGeometry s = builtin_chart("sphere2");
  CHECK(s.curvature4(0, 1, 0, 1) == s.det_metric());
}

TEST_CASE("metric connection is torsion free and parallel") {
  for (const char* name : {"flat2", "sphere2", "halfplane", "tlift1q"}) {
    const ChartGeometry c = builtin_chart(name);
    CHECK(c.dnabla(VectorValuedForm::identity(c.dim())).is_zero());
    const int n = c.dim();
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          Scalar v = c.metric()[i][j].partial(k);
          for (int l = 0; l < n; ++l)
            v -= c.christoffel(l, k, i) * c.metric()[l][j] + c.christoffel(l, k, j) * c.metric()[i][l];
          CHECK(v.is_zero());
        }
  }
}

TEST_CASE("almost complex and almost product structures") {
  const ChartGeometry flat = builtin_chart("flat2");
  const VectorField ex = VectorField::coordinate(2, 0);
  const VectorField ey = VectorField::coordinate(2, 1);
  CHECK(apply_j(flat, ex) == ey);
  CHECK(squares_to(flat.j_matrix(), -1));
  for (const char* name : {"sphere2", "halfplane", "cp2"}) CHECK(squares_to(builtin_chart(name).j_matrix(), -1));

  const ChartGeometry h = builtin_chart("halfplane");
  const VectorField x = gradsym::test::field({"x", "1+y"});
  const VectorField y = gradsym::test::field({"y^2", "x"});
  CHECK(h.g(apply_j(h, x), y) == h.omega(x, y));

  CHECK(squares_to(builtin_chart("tlift1").j_matrix(), 1));
  CHECK(squares_to(tangent_lift_canonical_j(1, builtin_base_metric("tlift1q")), 1));
}

TEST_CASE("musical isomorphisms") {
  const VectorField ex = VectorField::coordinate(2, 0);
  CHECK(builtin_chart("flat2").flat(ex) == form("dx"));
  const ChartGeometry h = builtin_chart("halfplane");
  CHECK(h.flat(ex) == form("dx/y^2"));
  const VectorField v = gradsym::test::field({"x*y", "1/(1+x^2)"});
  CHECK(h.sharp(h.flat(v)) == v);
  CHECK_THROWS_AS(h.sharp(form("dx^dy")), UsageError);
}

TEST_CASE("Hamiltonian vector fields and Poisson brackets") {
  const ChartGeometry flat = builtin_chart("flat2");
  CHECK(flat.hamiltonian_field(scalar("x")) == VectorField(std::vector<Scalar>{Scalar(2), scalar("-1")}));
  CHECK(flat.poisson(scalar("x"), scalar("y")) == scalar("1"));
  const Scalar f = scalar("x^2*y + y^3");
  CHECK(flat.poisson(f, f).is_zero());
  CHECK(insert_vector(flat.hamiltonian_field(f), flat.omega_form()) == exterior_derivative(Form(2, f)));
}

TEST_CASE("tangent lift of the line") {
  const ChartGeometry t = builtin_chart("tlift1");
  const std::vector<std::string> qv{"q", "v"};
  CHECK(t.omega_form() == form("dv^dq", qv));
  CHECK(exterior_derivative(t.omega_form()).is_zero());
}

TEST_CASE("degenerate data is rejected") {
  const std::vector<std::string> coords{"x", "y"};
  Matrix g = identity_matrix(2, 2);
  g[1][1] = Scalar(2);
  Matrix w = zero_matrix(2, 2, 2);
  w[0][1] = Scalar(2, 1);
  w[1][0] = Scalar(2, -1);
  CHECK_THROWS_AS(ChartGeometry("bad", coords, g, w), ConstructionError);
}
