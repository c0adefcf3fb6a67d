#include "gradsym/graded_form.hpp"

#include "gradsym/errors.hpp"

namespace gradsym {

namespace {

bool odd(int k) { return (k & 1) != 0; }

WedgeMask bit(int i) { return WedgeMask{1} << i; }

void check_dims(const ChartGeometry& chart, int table_dim) {
  if (chart.dim() != table_dim) throw UsageError("graded form and chart have different dimensions");
}

std::vector<Derivation> basics(const ChartGeometry& chart, Basis basis) {
  std::vector<Derivation> out;
  for (int e = 0; e < 2 * chart.dim(); ++e) out.push_back(basic_derivation(chart, basis, e));
  return out;
}

GradedTwoForm empty_table(int n, Basis basis, int weight) {
  return GradedTwoForm{basis, weight, std::vector<std::vector<Form>>(2 * n, std::vector<Form>(2 * n, Form(n)))};
}

// Lowest degree of a derivation, used as the nominal weight shift of mixed insertions.
int nominal_degree(const Derivation& d) {
  const auto degs = d.degrees();
  return degs.empty() ? 0 : degs.front();
}

// Evaluates a homogeneous-triple instance of the graded Palais formula.
Form palais3(const ChartGeometry& chart, const GradedTwoForm& t, int p1, const Derivation& d1, int p2,
             const Derivation& d2, int p3, const Derivation& d3) {
  Form out = d1.apply(eval_graded(chart, t, d2, d3));
  Form second = d2.apply(eval_graded(chart, t, d1, d3));
  if (odd(p1 * p2)) out += second; else out -= second;
  Form third = d3.apply(eval_graded(chart, t, d1, d2));
  if (odd(p3 * (p1 + p2))) out -= third; else out += third;

  out -= eval_graded(chart, t, commutator(d1, d2), d3);
  Form c13 = eval_graded(chart, t, commutator(d1, d3), d2);
  if (odd(p2 * p3)) out -= c13; else out += c13;
  Form c23 = eval_graded(chart, t, commutator(d2, d3), d1);
  if (odd(p1 * (p2 + p3))) out += c23; else out -= c23;
  return out;
}

}  // namespace

Derivation basic_derivation(const ChartGeometry& chart, Basis basis, int e) {
  const int n = chart.dim();
  if (e < 0 || e >= 2 * n) throw UsageError("basic derivation index out of range");
  if (e >= n) return Derivation::insertion(VectorField::coordinate(n, e - n));
  const VectorField x = VectorField::coordinate(n, e);
  return basis == Basis::lie ? Derivation::lie(x) : chart.nabla(x);
}

std::vector<Form> decompose(const ChartGeometry& chart, const Derivation& d, Basis basis) {
  const int n = chart.dim();
  std::vector<Form> c(2 * n, Form(n));
  for (int a = 0; a < n; ++a) c[a] = d.apply(Form::coordinate(n, a));
  for (int b = 0; b < n; ++b) {
    Form v = d.apply(Form::dx(n, b));
    if (basis == Basis::nabla) {
      // nabla_{d_a} dx^b = -Gamma^b_{ac} dx^c, so the insertion coefficient absorbs it back.
      for (int a = 0; a < n; ++a) {
        if (c[a].is_zero()) continue;
        Form gamma_row(n);
        for (int k = 0; k < n; ++k)
          if (!chart.christoffel(b, a, k).is_zero()) gamma_row += Form::monomial(n, bit(k), chart.christoffel(b, a, k));
        if (!gamma_row.is_zero()) v += wedge(c[a], gamma_row);
      }
    }
    c[n + b] = std::move(v);
  }
  return c;
}

Form parity_twist(const Form& a) {
  Form out = a;
  for (int p : a.degrees())
    if (odd(p)) out -= a.part(p) * Rational(2);
  return out;
}

std::vector<std::pair<int, Derivation>> homogeneous_parts(const Derivation& d) {
  std::vector<std::pair<int, Derivation>> out;
  for (int k : d.degrees()) out.emplace_back(k, d.part(k));
  return out;
}

bool operator==(const GradedOneForm& a, const GradedOneForm& b) {
  return a.basis == b.basis && a.values == b.values;
}

bool operator==(const GradedTwoForm& a, const GradedTwoForm& b) {
  return a.basis == b.basis && a.values == b.values;
}

GradedOneForm operator+(const GradedOneForm& a, const GradedOneForm& b) {
  if (a.basis != b.basis || a.values.size() != b.values.size()) throw UsageError("graded 1-forms are not compatible");
  GradedOneForm out = a;
  for (std::size_t e = 0; e < a.values.size(); ++e) out.values[e] += b.values[e];
  return out;
}

GradedOneForm operator-(const GradedOneForm& a, const GradedOneForm& b) { return a + Rational(-1) * b; }

GradedOneForm operator*(const Rational& c, const GradedOneForm& a) {
  GradedOneForm out = a;
  for (auto& v : out.values) v *= c;
  return out;
}

GradedTwoForm operator+(const GradedTwoForm& a, const GradedTwoForm& b) {
  if (a.basis != b.basis || a.values.size() != b.values.size()) throw UsageError("graded 2-forms are not compatible");
  GradedTwoForm out = a;
  for (std::size_t e = 0; e < a.values.size(); ++e)
    for (std::size_t f = 0; f < a.values.size(); ++f) out.values[e][f] += b.values[e][f];
  return out;
}

GradedTwoForm operator-(const GradedTwoForm& a, const GradedTwoForm& b) { return a + Rational(-1) * b; }

GradedTwoForm operator*(const Rational& c, const GradedTwoForm& a) {
  GradedTwoForm out = a;
  for (auto& row : out.values)
    for (auto& v : row) v *= c;
  return out;
}

Form eval_graded(const ChartGeometry& chart, const GradedOneForm& l, const Derivation& d) {
  check_dims(chart, l.dim());
  const auto c = decompose(chart, d, l.basis);
  Form out(chart.dim());
  for (std::size_t e = 0; e < c.size(); ++e)
    if (!c[e].is_zero() && !l.values[e].is_zero()) out += wedge(c[e], l.values[e]);
  return out;
}

Form eval_graded(const ChartGeometry& chart, const GradedTwoForm& t, const Derivation& d1, const Derivation& d2) {
  check_dims(chart, t.dim());
  const int n = chart.dim();
  const auto c1 = decompose(chart, d1, t.basis);
  const auto c2 = decompose(chart, d2, t.basis);
  std::vector<Form> c2_twisted(c2.size(), Form(n));
  for (std::size_t f = 0; f < c2.size(); ++f) c2_twisted[f] = parity_twist(c2[f]);
  Form out(n);
  for (int e = 0; e < 2 * n; ++e) {
    if (c1[e].is_zero()) continue;
    // Moving the second coefficient past E_e costs (-1)^{|c||E_e|}.
    const auto& second = e < n ? c2 : c2_twisted;
    Form inner(n);
    for (int f = 0; f < 2 * n; ++f)
      if (!second[f].is_zero() && !t.values[e][f].is_zero()) inner += wedge(second[f], t.values[e][f]);
    if (!inner.is_zero()) out += wedge(c1[e], inner);
  }
  return out;
}

GradedOneForm to_basis(const ChartGeometry& chart, const GradedOneForm& l, Basis basis) {
  if (l.basis == basis) return l;
  GradedOneForm out{basis, l.weight, {}};
  for (const auto& e : basics(chart, basis)) out.values.push_back(eval_graded(chart, l, e));
  return out;
}

GradedTwoForm to_basis(const ChartGeometry& chart, const GradedTwoForm& t, Basis basis) {
  if (t.basis == basis) return t;
  const int n = chart.dim();
  const auto b = basics(chart, basis);
  GradedTwoForm out = empty_table(n, basis, t.weight);
  for (int e = 0; e < 2 * n; ++e)
    for (int f = 0; f < 2 * n; ++f) out.values[e][f] = eval_graded(chart, t, b[e], b[f]);
  return out;
}

GradedOneForm build_lambda(const ChartGeometry& chart, bool include_l) {
  const int n = chart.dim();
  GradedOneForm out{Basis::lie, 2, std::vector<Form>(2 * n, Form(n))};
  for (int a = 0; a < n; ++a) {
    const Form flat = chart.flat(VectorField::coordinate(n, a));
    out.values[a] = exterior_derivative(flat);
    if (include_l && chart.has_l_tensor()) out.values[a] += chart.l_form(a);
    out.values[n + a] = flat;
  }
  return out;
}

GradedOneForm build_lambda_omega(const ChartGeometry& chart) {
  const int n = chart.dim();
  GradedOneForm out{Basis::lie, 1, std::vector<Form>(2 * n, Form(n))};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (!chart.symplectic()[a][b].is_zero()) out.values[a] += Form::monomial(n, bit(b), chart.symplectic()[a][b]);
  return out;
}

GradedOneForm dG_function(const ChartGeometry& chart, const Form& a, Basis basis) {
  // A mixed-degree source has no single weight; its table is still exact.
  GradedOneForm out{basis, a.is_homogeneous() ? a.degree(0) : 0, {}};
  for (const auto& e : basics(chart, basis)) out.values.push_back(e.apply(a));
  return out;
}

GradedTwoForm dG_graded1(const ChartGeometry& chart, const GradedOneForm& l) {
  check_dims(chart, l.dim());
  const int n = chart.dim();
  const auto b = basics(chart, l.basis);
  GradedTwoForm out = empty_table(n, l.basis, l.weight);
  for (int e = 0; e < 2 * n; ++e)
    for (int f = 0; f < 2 * n; ++f) {
      Form v = b[e].apply(l.values[f]);
      const Form swapped = b[f].apply(l.values[e]);
      if (odd(basic_degree(n, e) * basic_degree(n, f))) v += swapped; else v -= swapped;
      const Derivation br = commutator(b[e], b[f]);
      if (!br.is_zero()) v -= eval_graded(chart, l, br);
      out.values[e][f] = std::move(v);
    }
  return out;
}

Form dG_graded2(const ChartGeometry& chart, const GradedTwoForm& t, const Derivation& d1, const Derivation& d2,
                const Derivation& d3) {
  Form out(chart.dim());
  for (const auto& [p1, h1] : homogeneous_parts(d1))
    for (const auto& [p2, h2] : homogeneous_parts(d2))
      for (const auto& [p3, h3] : homogeneous_parts(d3)) out += palais3(chart, t, p1, h1, p2, h2, p3, h3);
  return out;
}

GradedTwoForm build_theta(const ChartGeometry& chart, ThetaVariant variant) {
  const int n = chart.dim();
  GradedTwoForm theta = empty_table(n, Basis::lie, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (!chart.symplectic()[a][b].is_zero()) theta.values[a][b] = Form(n, chart.symplectic()[a][b]);
  if (variant == ThetaVariant::omega_only) return theta;
  const GradedOneForm lambda = build_lambda(chart, variant == ThetaVariant::omega_g_l);
  return theta + Rational(1, 2) * dG_graded1(chart, lambda);
}

GradedTwoForm build_theta_closed_form(const ChartGeometry& chart) {
  const int n = chart.dim();
  const Matrix& g = chart.metric();
  GradedTwoForm t = empty_table(n, Basis::lie, 0);
  // g(nabla_{d_u} d_a, d_b) = Gamma^m_{ua} g_{mb}
  auto gnabla = [&](int u, int a, int b) {
    Scalar s(n);
    for (int m = 0; m < n; ++m)
      if (!chart.christoffel(m, u, a).is_zero() && !g[m][b].is_zero()) s += chart.christoffel(m, u, a) * g[m][b];
    return s;
  };
  // g(nabla_U Y, nabla_V X) for coordinate fields
  auto gg = [&](int u, int y, int v, int x) {
    Scalar s(n);
    for (int m = 0; m < n; ++m)
      for (int k = 0; k < n; ++k)
        if (!chart.christoffel(m, u, y).is_zero() && !chart.christoffel(k, v, x).is_zero() && !g[m][k].is_zero())
          s += g[m][k] * chart.christoffel(m, u, y) * chart.christoffel(k, v, x);
    return s;
  };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Form ll(n, chart.symplectic()[a][b]);
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
          const Scalar c = gg(u, b, v, a) - gg(u, a, v, b) - chart.curvature4(a, b, u, v);
          if (!c.is_zero()) ll += Form::monomial(n, bit(u) | bit(v), c);
        }
      t.values[a][b] = ll;
      Form li(n);
      for (int u = 0; u < n; ++u) {
        const Scalar c = gnabla(u, a, b);
        if (!c.is_zero()) li += Form::monomial(n, bit(u), c);
      }
      t.values[a][n + b] = li;
      t.values[n + b][a] = -li;
      t.values[n + a][n + b] = Form(n, g[a][b]);
    }
  return t;
}

GradedTwoForm build_theta_nabla_closed_form(const ChartGeometry& chart) {
  const int n = chart.dim();
  const Matrix& g = chart.metric();
  GradedTwoForm t = empty_table(n, Basis::nabla, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      // w(X,Y) - R(X,Y,_,_) with the 4-tensor sign, which is +g(R(X,Y)_,_).
      Form nn(n, chart.symplectic()[a][b]);
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
          const Scalar c = chart.curvature4(a, b, u, v);
          if (!c.is_zero()) nn -= Form::monomial(n, bit(u) | bit(v), c);
        }
      t.values[a][b] = nn;
      t.values[n + a][n + b] = Form(n, g[a][b]);
    }
  return t;
}

GradedTwoForm build_theta_ks(const ChartGeometry& chart) { return dG_graded1(chart, build_lambda_omega(chart)); }

Matrix degree_zero_block(const GradedTwoForm& t) {
  const int n = t.dim();
  Matrix m = zero_matrix(n, 2 * n, 2 * n);
  for (int e = 0; e < 2 * n; ++e)
    for (int f = 0; f < 2 * n; ++f) m[e][f] = t.values[e][f].function_part();
  return m;
}

GradedOneForm iota_derivation(const ChartGeometry& chart, const Derivation& d, const GradedTwoForm& t) {
  GradedOneForm out{t.basis, t.weight + nominal_degree(d), {}};
  for (const auto& e : basics(chart, t.basis)) out.values.push_back(eval_graded(chart, t, e, d));
  return out;
}

Form iota_derivation(const ChartGeometry& chart, const Derivation& d, const GradedOneForm& l) {
  return eval_graded(chart, l, d);
}

GradedOneForm lieG(const ChartGeometry& chart, const Derivation& d, const GradedOneForm& l) {
  const GradedTwoForm dl = dG_graded1(chart, l);
  const Form contracted = eval_graded(chart, l, d);
  GradedOneForm out{l.basis, l.weight + nominal_degree(d), {}};
  for (const auto& e : basics(chart, l.basis))
    out.values.push_back(eval_graded(chart, dl, e, d) + e.apply(contracted));
  return out;
}

GradedTwoForm lieG(const ChartGeometry& chart, const Derivation& d, const GradedTwoForm& t) {
  const int n = chart.dim();
  const auto b = basics(chart, t.basis);
  const GradedTwoForm exact_part = dG_graded1(chart, iota_derivation(chart, d, t));
  GradedTwoForm out = empty_table(n, t.basis, t.weight + nominal_degree(d));
  for (int e = 0; e < 2 * n; ++e)
    for (int f = 0; f < 2 * n; ++f)
      out.values[e][f] = dG_graded2(chart, t, b[e], b[f], d) + exact_part.values[e][f];
  return out;
}

}  // namespace gradsym
