#include <doctest.h>

#include <string>

#include "gradsym/errors.hpp"
#include "gradsym/manifest.hpp"
#include "gradsym/suites.hpp"

using namespace gradsym;

namespace {

const char* kPlane = R"(# the Euclidean plane
[chart]
name=plane, dim=2, coords=x,y
kahler=true

[metric]
g.1.1=1
g.2.2=1

[symplectic]
w.1.2=1
)";

const char* kViolating = R"([chart]
name=flat4-violating
dim=4
coords=x,y,z,w

[metric]
g.1.1=1
g.2.2=1
g.3.3=1
g.4.4=1

[symplectic]
w.1.2=1
w.3.4=1

[ltensor]
L.1.1.3=1
)";

int error_line(const std::string& text) {
  try {
    parse_manifest(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

int error_column(const std::string& text) {
  try {
    parse_manifest(text);
  } catch (const ParseError& e) {
    return e.column();
  }
  return 0;
}

}  // namespace

TEST_CASE("a well-formed manifest") {
  const ChartManifest m = read_manifest(kPlane);
  CHECK(m.name == "plane");
  CHECK(m.dim == 2);
  CHECK(m.kahler_expected == true);
  const ChartGeometry c = build_chart(m);
  CHECK(c.dim() == 2);
  CHECK(c.metric()[1][1] == Scalar(2, 1));
  CHECK(c.symplectic()[1][0] == Scalar(2, -1));
  CHECK(is_kahler(c));
}

TEST_CASE("syntax errors point at the offending text") {
  CHECK(error_line("[chart]\nname=a, dim=2, coords=x,y\n[metric]\ng.1.1=1\ng.2.2=1\n[symplectic]\nw.1.3=1\n") == 7);
  CHECK(error_column("[chart]\nname=a, dim=2, coords=x,y\n[metric]\ng.1.1=1\ng.2.2=1\n[symplectic]\nw.1.3=1\n") == 5);
  const std::string tail = "[symplectic]\nw.1.2=1\n";
  CHECK(error_line("[chart]\nname=a, dim=2, coords=x,y\n[metric]\ng.1.1=1+*x\n" + tail) == 4);
  CHECK(error_column("[chart]\nname=a, dim=2, coords=x,y\n[metric]\ng.1.1=1+*x\n" + tail) == 9);
  CHECK(error_line("[chart]\nname=a, dim=2, coords=x,y\ncolour=red\n") == 3);
  CHECK(error_line("[chart]\nname=a, dim=3, coords=x,y\n") == 2);
  CHECK(error_column("[chart]\nname=a, dim=3, coords=x,y\n") == 23);
  CHECK(error_line("[chart]\nname=a, dim=2, coords=x,y\n[metric]\ng.1.1=1\ng.2.2=1\n") > 0);
  CHECK(error_line("[chart]\nname=a, dim=2, coords=x,y\n[metric]\ng.1.1=1\ng.1.1=2\n") == 5);
  CHECK(error_line("[chart]\nname=a, dim=2, coords=x,y\n[metric]\ng.1.1=1\ng.2.2=z\n" + tail) == 5);
  CHECK(error_line("[chart]\nname=a, dim=2, coords=x,y\n[curvature]\n") == 3);
}

TEST_CASE("structurally invalid charts are rejected") {
  // w = z dx^dy + dz^dw is not closed
  CHECK_THROWS_WITH_AS(parse_manifest("[chart]\nname=r4, dim=4, coords=x,y,z,w\n[metric]\ng.1.1=1\ng.2.2=1\ng.3.3=1\ng.4.4=1\n"
                                      "[symplectic]\nw.1.2=z\nw.3.4=1\n"),
                       doctest::Contains("not closed"), ConstructionError);
  CHECK_THROWS_WITH_AS(parse_manifest("[chart]\nname=a, dim=2, coords=x,y\n[metric]\ng.1.1=1\n[symplectic]\nw.1.2=1\n"),
                       doctest::Contains("det g = 0"), ConstructionError);
  CHECK_THROWS_WITH_AS(parse_manifest("[chart]\nname=a, dim=2, coords=x,y\n[metric]\ng.1.1=1\ng.2.2=1\ng.1.2=x\ng.2.1=y\n"
                                      "[symplectic]\nw.1.2=1\n"),
                       doctest::Contains("not symmetric"), ConstructionError);
  CHECK_THROWS_WITH_AS(parse_manifest("[chart]\nname=a, dim=2, coords=x,y\n[metric]\ng.1.1=1\ng.2.2=1\n"
                                      "[symplectic]\nw.1.2=1\nw.2.1=1\n"),
                       doctest::Contains("not antisymmetric"), ConstructionError);
  CHECK_THROWS_AS(load_chart("/nonexistent/chart.ini"), UsageError);
}

TEST_CASE("builtin sources") {
  CHECK(load_chart("builtin:halfplane").name() == "halfplane");
  CHECK_THROWS_AS(load_chart("builtin:torus"), UsageError);
}

TEST_CASE("a chart whose L breaks the J condition fails the locally Hamiltonian check") {
  const ChartGeometry c = parse_manifest(kViolating);
  REQUIRE(c.has_l_tensor());
  SuiteRunner runner(c, SuiteOptions{});
  bool found = false;
  for (const auto& r : runner.run(CheckGroup::locally_hamiltonian)) {
    if (r.id == "theorems.locally_hamiltonian_chart") {
      found = true;
      CHECK(r.status == CheckStatus::fail);
    }
    if (r.id == "theorems.locally_hamiltonian") CHECK(r.status == CheckStatus::pass);
  }
  CHECK(found);
}
