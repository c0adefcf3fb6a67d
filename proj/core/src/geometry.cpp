#include "gradsym/geometry.hpp"

#include "gradsym/errors.hpp"

namespace gradsym {

ChartGeometry::ChartGeometry(std::string name, std::vector<std::string> coordinates, Matrix metric,
                             Matrix symplectic, std::optional<LTensor> l_tensor)
    : name_(std::move(name)),
      coords_(std::move(coordinates)),
      g_(std::move(metric)),
      w_(std::move(symplectic)),
      l_(std::move(l_tensor)) {
  const int n = dim();
  if (n <= 0 || n > kMaxVariables) throw ConstructionError("chart dimension out of range");
  if (n % 2 != 0) throw ConstructionError("chart dimension must be even to carry a symplectic form");
  auto check_shape = [n](const Matrix& m, const char* what) {
    if (static_cast<int>(m.size()) != n) throw ConstructionError(std::string(what) + " has the wrong size");
    for (const auto& row : m) {
      if (static_cast<int>(row.size()) != n) throw ConstructionError(std::string(what) + " has the wrong size");
      for (const auto& e : row)
        if (e.nvars() != n) throw ConstructionError(std::string(what) + " entry lives in the wrong chart");
    }
  };
  check_shape(g_, "metric");
  check_shape(w_, "symplectic form");
  const std::vector<std::string>& names = coords_;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!(g_[i][j] == g_[j][i]))
        throw ConstructionError("metric is not symmetric: g." + std::to_string(i + 1) + "." +
                                std::to_string(j + 1) + " = " + g_[i][j].to_string(names) + " but g." +
                                std::to_string(j + 1) + "." + std::to_string(i + 1) + " = " +
                                g_[j][i].to_string(names));
      if (!(w_[i][j] == -w_[j][i]))
        throw ConstructionError("symplectic form is not antisymmetric at w." + std::to_string(i + 1) + "." +
                                std::to_string(j + 1));
    }
  if (l_) {
    const LTensor& l = *l_;
    if (static_cast<int>(l.size()) != n) throw ConstructionError("L tensor has the wrong size");
    for (int i = 0; i < n; ++i) {
      if (static_cast<int>(l[i].size()) != n) throw ConstructionError("L tensor has the wrong size");
      for (int j = 0; j < n; ++j) {
        if (static_cast<int>(l[i][j].size()) != n) throw ConstructionError("L tensor has the wrong size");
        for (int k = 0; k < n; ++k)
          if (!(l[i][j][k] == -l[i][k][j]))
            throw ConstructionError("L tensor is not antisymmetric in its last two slots at L." +
                                    std::to_string(i + 1) + "." + std::to_string(j + 1) + "." +
                                    std::to_string(k + 1));
      }
    }
  }
  det_g_ = determinant(g_);
  if (det_g_.is_zero()) throw ConstructionError("metric is degenerate: det g = 0");
  det_w_ = determinant(w_);
  if (det_w_.is_zero()) throw ConstructionError("symplectic form is degenerate: det w = 0");
  const Form dw = exterior_derivative(omega_form());
  if (!dw.is_zero()) throw ConstructionError("symplectic form is not closed: dw = " + dw.to_string(names));
  compute_derived();
}

ChartGeometry ChartGeometry::with_l_tensor(std::optional<LTensor> l) const {
  return ChartGeometry(name_, coords_, g_, w_, std::move(l));
}

ChartGeometry ChartGeometry::renamed(std::string name) const {
  ChartGeometry c = *this;
  c.name_ = std::move(name);
  return c;
}

void ChartGeometry::compute_derived() {
  const int n = dim();
  g_inv_ = *inverse(g_);
  w_inv_ = *inverse(w_);
  // J^b_j = g^{bl} w_{jl}
  j_ = zero_matrix(n, n, n);
  for (int b = 0; b < n; ++b)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l)
        if (!g_inv_[b][l].is_zero() && !w_[j][l].is_zero()) j_[b][j] += g_inv_[b][l] * w_[j][l];
  j_inv_ = *inverse(j_);
  lambda_ = zero_matrix(n, n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) lambda_[a][b] = -w_inv_[a][b];

  // Gamma^i_{jk} = 1/2 g^{im} (d_j g_{mk} + d_k g_{mj} - d_m g_{jk})
  std::vector<std::vector<std::vector<Scalar>>> dg(
      n, std::vector<std::vector<Scalar>>(n, std::vector<Scalar>(n, Scalar(n))));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) dg[a][b][c] = g_[b][c].partial(a);
  gamma_.assign(n, std::vector<std::vector<Scalar>>(n, std::vector<Scalar>(n, Scalar(n))));
  const Rational half(1, 2);
  for (int j = 0; j < n; ++j)
    for (int k = j; k < n; ++k) {
      std::vector<Scalar> lowered(n, Scalar(n));
      for (int m = 0; m < n; ++m) lowered[m] = (dg[j][m][k] + dg[k][m][j] - dg[m][j][k]) * half;
      for (int i = 0; i < n; ++i) {
        Scalar s(n);
        for (int m = 0; m < n; ++m)
          if (!g_inv_[i][m].is_zero() && !lowered[m].is_zero()) s += g_inv_[i][m] * lowered[m];
        gamma_[i][j][k] = s;
        gamma_[i][k][j] = s;
      }
    }

  // R^a_{bcd} = d_c Gamma^a_{db} - d_d Gamma^a_{cb} + Gamma^a_{ce} Gamma^e_{db} - Gamma^a_{de} Gamma^e_{cb}
  riemann_.assign(n, std::vector<std::vector<std::vector<Scalar>>>(
                         n, std::vector<std::vector<Scalar>>(n, std::vector<Scalar>(n, Scalar(n)))));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          Scalar r = gamma_[a][d][b].partial(c) - gamma_[a][c][b].partial(d);
          for (int e = 0; e < n; ++e) {
            if (!gamma_[a][c][e].is_zero() && !gamma_[e][d][b].is_zero()) r += gamma_[a][c][e] * gamma_[e][d][b];
            if (!gamma_[a][d][e].is_zero() && !gamma_[e][c][b].is_zero()) r -= gamma_[a][d][e] * gamma_[e][c][b];
          }
          riemann_[a][b][c][d] = r;
          riemann_[a][b][d][c] = -r;
        }
  curvature_forms_.assign(n, std::vector<Form>(n, Form(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = c + 1; d < n; ++d)
          if (!riemann_[a][b][c][d].is_zero())
            curvature_forms_[a][b] += Form::monomial(n, (WedgeMask{1} << c) | (WedgeMask{1} << d), riemann_[a][b][c][d]);
}

Scalar ChartGeometry::curvature4(int u, int v, int w, int z) const {
  Scalar s(dim());
  for (int m = 0; m < dim(); ++m)
    if (!g_[z][m].is_zero() && !riemann_[m][w][u][v].is_zero()) s += g_[z][m] * riemann_[m][w][u][v];
  return -s;
}

Form ChartGeometry::omega_form() const {
  const int n = dim();
  Form f(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!w_[i][j].is_zero()) f += Form::monomial(n, (WedgeMask{1} << i) | (WedgeMask{1} << j), w_[i][j]);
  return f;
}

VectorValuedForm ChartGeometry::j_tensor() const {
  const int n = dim();
  std::vector<Form> comps(n, Form(n));
  for (int b = 0; b < n; ++b)
    for (int j = 0; j < n; ++j)
      if (!j_[b][j].is_zero()) comps[b] += Form::monomial(n, WedgeMask{1} << j, j_[b][j]);
  return VectorValuedForm(1, std::move(comps));
}

Form ChartGeometry::l_form(int i) const {
  const int n = dim();
  Form f(n);
  if (!l_) return f;
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k)
      if (!(*l_)[i][j][k].is_zero()) f += Form::monomial(n, (WedgeMask{1} << j) | (WedgeMask{1} << k), (*l_)[i][j][k]);
  return f;
}

Scalar ChartGeometry::g(const VectorField& x, const VectorField& y) const {
  Scalar s(dim());
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j)
      if (!x[i].is_zero() && !y[j].is_zero() && !g_[i][j].is_zero()) s += g_[i][j] * x[i] * y[j];
  return s;
}

Scalar ChartGeometry::omega(const VectorField& x, const VectorField& y) const {
  Scalar s(dim());
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j)
      if (!x[i].is_zero() && !y[j].is_zero() && !w_[i][j].is_zero()) s += w_[i][j] * x[i] * y[j];
  return s;
}

Form ChartGeometry::flat(const VectorField& x) const {
  const int n = dim();
  Form f(n);
  for (int j = 0; j < n; ++j) {
    Scalar c(n);
    for (int i = 0; i < n; ++i)
      if (!x[i].is_zero() && !g_[i][j].is_zero()) c += g_[i][j] * x[i];
    if (!c.is_zero()) f += Form::monomial(n, WedgeMask{1} << j, c);
  }
  return f;
}

VectorField ChartGeometry::sharp(const Form& a) const {
  const int n = dim();
  if (!a.is_zero() && a.degrees() != std::vector<int>{1})
    throw UsageError("sharp is only defined on 1-forms");
  VectorField x(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Scalar c = a.coefficient(WedgeMask{1} << j);
      if (!c.is_zero() && !g_inv_[i][j].is_zero()) x[i] += g_inv_[i][j] * c;
    }
  return x;
}

VectorField ChartGeometry::covariant(const VectorField& x, const VectorField& y) const {
  const int n = dim();
  VectorField out(n);
  for (int i = 0; i < n; ++i) {
    Scalar s = x.apply(y[i]);
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (!x[j].is_zero() && !y[k].is_zero() && !gamma_[i][j][k].is_zero()) s += gamma_[i][j][k] * x[j] * y[k];
    out[i] = s;
  }
  return out;
}

VectorValuedForm ChartGeometry::dnabla(const VectorValuedForm& s) const {
  const int n = dim();
  std::vector<Form> comps(n, Form(n));
  for (int i = 0; i < n; ++i) {
    comps[i] = exterior_derivative(s[i]);
    for (int j = 0; j < n; ++j) {
      Form rest(n);
      for (int k = 0; k < n; ++k)
        if (!gamma_[i][j][k].is_zero() && !s[k].is_zero()) rest += gamma_[i][j][k] * s[k];
      if (!rest.is_zero()) comps[i] += wedge(Form::dx(n, j), rest);
    }
  }
  return VectorValuedForm(s.degree() + 1, std::move(comps));
}

Derivation ChartGeometry::nabla(const VectorField& x) const {
  return Derivation::lie(x) - Derivation::insertion(dnabla(VectorValuedForm::from_vector_field(x)));
}

Derivation ChartGeometry::nabla(const VectorValuedForm& k) const {
  const int n = dim();
  Derivation out(n);
  for (int a = 0; a < n; ++a)
    if (!k[a].is_zero()) out += nabla(VectorField::coordinate(n, a)).left_multiplied(k[a]);
  return out;
}

VectorValuedForm ChartGeometry::curvature_apply(const VectorValuedForm& k) const {
  const int n = dim();
  std::vector<Form> comps(n, Form(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (!curvature_forms_[a][b].is_zero() && !k[b].is_zero()) comps[a] += wedge(curvature_forms_[a][b], k[b]);
  return VectorValuedForm(k.degree() + 2, std::move(comps));
}

VectorValuedForm ChartGeometry::j_inverse_apply(const VectorValuedForm& k) const { return k.transformed(j_inv_); }

VectorField ChartGeometry::hamiltonian_field(const Scalar& f) const {
  // sum_i X^i w_{ij} = d_j f, so X = -w^{-1} grad f.
  const int n = dim();
  VectorField x(n);
  for (int j = 0; j < n; ++j) {
    const Scalar df = f.partial(j);
    if (df.is_zero()) continue;
    for (int i = 0; i < n; ++i)
      if (!w_inv_[i][j].is_zero()) x[i] -= w_inv_[i][j] * df;
  }
  return x;
}

Scalar ChartGeometry::poisson(const Scalar& f, const Scalar& h) const {
  return omega(hamiltonian_field(f), hamiltonian_field(h));
}

namespace {

// Christoffel symbols of the base metric, over the full tangent-bundle variables.
std::vector<std::vector<std::vector<Scalar>>> base_christoffel(int m, const Matrix& base_metric) {
  const int n = 2 * m;
  const Matrix ginv = *inverse(base_metric);
  std::vector<std::vector<std::vector<Scalar>>> gamma(
      m, std::vector<std::vector<Scalar>>(m, std::vector<Scalar>(m, Scalar(n))));
  const Rational half(1, 2);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k) {
        Scalar s(n);
        for (int l = 0; l < m; ++l) {
          const Scalar lowered =
              (base_metric[l][k].partial(j) + base_metric[l][j].partial(k) - base_metric[j][k].partial(l)) * half;
          if (!lowered.is_zero() && !ginv[i][l].is_zero()) s += ginv[i][l] * lowered;
        }
        gamma[i][j][k] = s;
      }
  return gamma;
}

void check_base(int base_dim, const Matrix& base_metric) {
  if (base_dim <= 0 || 2 * base_dim > kMaxVariables) throw ConstructionError("base dimension out of range");
  if (static_cast<int>(base_metric.size()) != base_dim) throw ConstructionError("base metric has the wrong size");
  for (const auto& row : base_metric) {
    if (static_cast<int>(row.size()) != base_dim) throw ConstructionError("base metric has the wrong size");
    for (const auto& e : row) {
      if (e.nvars() != 2 * base_dim) throw ConstructionError("base metric must be written over (q, v) coordinates");
      for (int v = base_dim; v < 2 * base_dim; ++v)
        if (!e.partial(v).is_zero()) throw ConstructionError("base metric depends on fibre coordinates");
    }
  }
  if (determinant(base_metric).is_zero()) throw ConstructionError("base metric is degenerate");
}

}  // namespace

ChartGeometry tangent_lift_chart(const std::string& name, int base_dim, const Matrix& base_metric) {
  check_base(base_dim, base_metric);
  const int m = base_dim, n = 2 * m;
  const auto gamma = base_christoffel(m, base_metric);
  auto v = [n, m](int i) { return Scalar::variable(n, m + i); };

  // eta^j = dv^j + Gamma^j_{ab} v^a dq^b; g^H = g_ij (theta^i (x) eta^j + eta^i (x) theta^j).
  // Coframe coefficient rows: eta^j = sum_c E[j][c] dx^c over all 2m coordinates.
  Matrix eta = zero_matrix(n, m, n);
  for (int j = 0; j < m; ++j) {
    eta[j][m + j] = Scalar(n, Rational(1));
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        if (!gamma[j][a][b].is_zero()) eta[j][b] += gamma[j][a][b] * v(a);
  }
  Matrix gh = zero_matrix(n, n, n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (base_metric[i][j].is_zero()) continue;
      for (int c = 0; c < n; ++c) {
        if (eta[j][c].is_zero()) continue;
        const Scalar t = base_metric[i][j] * eta[j][c];
        gh[i][c] += t;  // theta^i (x) eta^j
        gh[c][i] += t;  // eta^j (x) theta^i
      }
    }

  // w_L = d(sum_i dL/dv^i dq^i) with L = 1/2 g_ij v^i v^j.
  Form theta_l(n);
  for (int i = 0; i < m; ++i) {
    Scalar p(n);
    for (int j = 0; j < m; ++j)
      if (!base_metric[i][j].is_zero()) p += base_metric[i][j] * v(j);
    if (!p.is_zero()) theta_l += Form::monomial(n, WedgeMask{1} << i, p);
  }
  const Form wl = exterior_derivative(theta_l);
  Matrix w = zero_matrix(n, n, n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      const Scalar c = wl.coefficient((WedgeMask{1} << a) | (WedgeMask{1} << b));
      w[a][b] = c;
      w[b][a] = -c;
    }

  std::vector<std::string> coords;
  if (m == 1) {
    coords = {"q", "v"};
  } else {
    for (int i = 0; i < m; ++i) coords.push_back("q" + std::to_string(i + 1));
    for (int i = 0; i < m; ++i) coords.push_back("v" + std::to_string(i + 1));
  }
  return ChartGeometry(name, std::move(coords), std::move(gh), std::move(w));
}

Matrix tangent_lift_canonical_j(int base_dim, const Matrix& base_metric) {
  check_base(base_dim, base_metric);
  const int m = base_dim, n = 2 * m;
  const auto gamma = base_christoffel(m, base_metric);
  // Horizontal lift of d_{q^i}: d_{q^i} - Gamma^j_{ik} v^k d_{v^j}. J fixes vertical
  // vectors and negates horizontal ones, so J d_{q^i} = -d_{q^i} + 2 Gamma^j_{ik} v^k d_{v^j}.
  Matrix j = zero_matrix(n, n, n);
  for (int i = 0; i < m; ++i) {
    j[i][i] = Scalar(n, Rational(-1));
    j[m + i][m + i] = Scalar(n, Rational(1));
    for (int jj = 0; jj < m; ++jj)
      for (int k = 0; k < m; ++k)
        if (!gamma[jj][i][k].is_zero())
          j[m + jj][i] += gamma[jj][i][k] * Scalar::variable(n, m + k) * Rational(2);
  }
  return j;
}

}  // namespace gradsym
