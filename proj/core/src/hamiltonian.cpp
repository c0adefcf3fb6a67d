#include "gradsym/hamiltonian.hpp"

#include "gradsym/errors.hpp"

namespace gradsym {

namespace {

bool odd(int k) { return (k & 1) != 0; }

// Keeps only the nonzero homogeneous components, keyed by degree.
std::map<int, VectorValuedForm> split_by_degree(int n, const std::vector<Form>& comps) {
  std::map<int, std::vector<Form>> parts;
  for (int a = 0; a < n; ++a)
    for (int p : comps[a].degrees()) {
      auto it = parts.find(p);
      if (it == parts.end()) it = parts.emplace(p, std::vector<Form>(n, Form(n))).first;
      it->second[a] = comps[a].part(p);
    }
  std::map<int, VectorValuedForm> out;
  for (auto& [p, c] : parts) out.emplace(p, VectorValuedForm(p, std::move(c)));
  return out;
}

Derivation assemble(const ChartGeometry& chart, const std::map<int, VectorValuedForm>& lie,
                    const std::map<int, VectorValuedForm>& insertion) {
  Derivation d(chart.dim());
  for (const auto& [p, k] : lie) d += chart.nabla(k);
  for (const auto& [p, b] : insertion) d += Derivation::insertion(b);
  return d;
}

}  // namespace

HamiltonianSolution solve_graded(const ChartGeometry& chart, const GradedTwoForm& theta_in, const GradedOneForm& mu_in) {
  const int n = chart.dim();
  const GradedTwoForm theta = to_basis(chart, theta_in, Basis::nabla);
  const GradedOneForm mu = to_basis(chart, mu_in, Basis::nabla);
  const auto t0_inv = inverse(degree_zero_block(theta));
  if (!t0_inv) throw InternalError("graded 2-form is degenerate: its degree-0 block is singular");

  // Row e of iota_D Theta reads sum_f (-1)^{p |E_e|} c_f^{(p)} ^ Theta[e][f] = mu_e.
  // Degree by degree, the degree-0 block of Theta is inverted against what the
  // lower-degree unknowns leave over.
  std::vector<Form> c(2 * n, Form(n));
  for (int q = 0; q <= n; ++q) {
    std::vector<Form> rhs(2 * n, Form(n));
    bool any = false;
    for (int e = 0; e < 2 * n; ++e) {
      Form r = mu.values[e].part(q);
      for (int f = 0; f < 2 * n; ++f) {
        const Form& entry = theta.values[e][f];
        if (entry.is_zero() || c[f].is_zero()) continue;
        for (int p : c[f].degrees()) {
          if (p >= q) continue;
          const Form higher = entry.part(q - p);
          if (higher.is_zero()) continue;
          const Form term = wedge(c[f].part(p), higher);
          if (e >= n && odd(p)) r += term; else r -= term;
        }
      }
      if (e >= n && odd(q)) r = -r;
      if (!r.is_zero()) any = true;
      rhs[e] = std::move(r);
    }
    if (!any) continue;
    for (int f = 0; f < 2 * n; ++f) {
      Form sol(n);
      for (int e = 0; e < 2 * n; ++e)
        if (!(*t0_inv)[f][e].is_zero() && !rhs[e].is_zero()) sol += rhs[e] * (*t0_inv)[f][e];
      c[f] += sol;
    }
  }

  HamiltonianSolution s;
  s.source = Form(n);
  s.lie = split_by_degree(n, std::vector<Form>(c.begin(), c.begin() + n));
  s.insertion = split_by_degree(n, std::vector<Form>(c.begin() + n, c.end()));
  s.derivation = assemble(chart, s.lie, s.insertion);
  return s;
}

HamiltonianSolution solve_hamiltonian(const ChartGeometry& chart, const GradedTwoForm& theta, const Form& a) {
  HamiltonianSolution s = solve_graded(chart, theta, dG_function(chart, a, Basis::nabla));
  s.source = a;
  return s;
}

RecursionResult k_even(const ChartGeometry& chart, const Scalar& f) {
  RecursionResult r;
  // K^0 solves w(Y, K^0) = Y(f); with i_{X_f} w = df that is -X_f.
  VectorValuedForm k = VectorValuedForm::from_vector_field(-chart.hamiltonian_field(f));
  for (int p = 0; p <= chart.dim(); p += 2) {
    if (k.is_zero()) break;
    r.components.emplace(p, k);
    k = -chart.j_inverse_apply(chart.curvature_apply(k));
  }
  r.derivation = assemble(chart, r.components, {});
  return r;
}

RecursionResult k_odd(const ChartGeometry& chart, const Scalar& f, OddRecursionSign sign) {
  const int n = chart.dim();
  // nabla_b(df) = sum_u (d_b d_u f - Gamma^m_{bu} d_m f) dx^u, and sum_a w_{ba} K^a = nabla_b(df).
  std::vector<Form> hessian(n, Form(n));
  for (int b = 0; b < n; ++b)
    for (int u = 0; u < n; ++u) {
      Scalar h = f.partial(b).partial(u);
      for (int m = 0; m < n; ++m)
        if (!chart.christoffel(m, b, u).is_zero()) h -= chart.christoffel(m, b, u) * f.partial(m);
      if (!h.is_zero()) hessian[b] += Form::monomial(n, WedgeMask{1} << u, h);
    }
  const Matrix w_inv = *inverse(chart.symplectic());
  std::vector<Form> k1(n, Form(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (!w_inv[a][b].is_zero() && !hessian[b].is_zero()) k1[a] += hessian[b] * w_inv[a][b];

  RecursionResult r;
  VectorValuedForm k(1, std::move(k1));
  for (int p = 1; p <= n; p += 2) {
    if (k.is_zero()) break;
    r.components.emplace(p, k);
    k = chart.j_inverse_apply(chart.curvature_apply(k));
    if (sign == OddRecursionSign::minus) k = -k;
  }
  Form df(n);
  for (int a = 0; a < n; ++a)
    if (!f.partial(a).is_zero()) df += Form::monomial(n, WedgeMask{1} << a, f.partial(a));
  std::map<int, VectorValuedForm> ins;
  ins.emplace(0, VectorValuedForm::from_vector_field(chart.sharp(df)));
  r.derivation = assemble(chart, r.components, ins);
  return r;
}

}  // namespace gradsym
