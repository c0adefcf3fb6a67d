#include "gradsym/brackets.hpp"

#include "gradsym/errors.hpp"

namespace gradsym {

namespace {

using VVF = VectorValuedForm;

bool odd(int k) { return (k & 1) != 0; }
Rational sign(bool negative) { return negative ? Rational(-1) : Rational(1); }

std::string cache_key(const ChartGeometry& chart, const Form& a) {
  return a.to_string(chart.coordinates());
}

// sum_{ab} m_ab A^a ^ B^b for vector-valued forms A, B.
Form pair_with(const Matrix& m, const VVF& a, const VVF& b) {
  const int n = a.dim();
  Form out(n);
  for (int i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; j < n; ++j)
      if (!m[i][j].is_zero() && !b[j].is_zero()) out += wedge(a[i], b[j]) * m[i][j];
  }
  return out;
}

// R(A, B, _, _) = sum_{ab} A^a ^ B^b ^ R(d_a, d_b, _, _) with the 4-tensor R.
Form curvature_pair(const ChartGeometry& chart, const VVF& a, const VVF& b) {
  const int n = chart.dim();
  Form out(n);
  for (int i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; j < n; ++j) {
      if (b[j].is_zero()) continue;
      Form r(n);
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
          const Scalar c = chart.curvature4(i, j, u, v);
          if (!c.is_zero()) r += Form::monomial(n, (WedgeMask{1} << u) | (WedgeMask{1} << v), c);
        }
      if (!r.is_zero()) out += wedge(wedge(a[i], b[j]), r);
    }
  }
  return out;
}

Form differential(int n, const Scalar& f) { return exterior_derivative(Form(n, f)); }

// Homogeneous pieces of a form keyed by degree.
std::map<int, Form> by_degree(const Form& a) {
  std::map<int, Form> out;
  for (int p : a.degrees()) out.emplace(p, a.part(p));
  return out;
}

// Generators of the form algebra used by the fast path: a function or the
// differential of a coordinate.
struct Generator {
  bool exact = false;  // dx^var when true, the function f otherwise
  Scalar f;
  int var = -1;
  int degree() const { return exact ? 1 : 0; }
};

class FastpathEngine {
 public:
  explicit FastpathEngine(const ChartGeometry& chart) : chart_(chart), n_(chart.dim()) {}

  // [[g, b]] for a generator g and an arbitrary form b, expanding b by Leibniz.
  Form generator_first(const Generator& g, const Form& b) {
    Form out(n_);
    for (const auto& [mask, coeff] : b.terms()) {
      out += wedge(with_generator(g, Generator{false, coeff, -1}), Form::monomial(n_, mask, Scalar(n_, Rational(1))));
      std::vector<int> idx;
      for (int v = 0; v < n_; ++v)
        if (mask & (WedgeMask{1} << v)) idx.push_back(v);
      for (std::size_t j = 0; j < idx.size(); ++j) {
        Form left = Form(n_, coeff);
        for (std::size_t k = 0; k < j; ++k) left = wedge(left, Form::dx(n_, idx[k]));
        Form right(n_, Scalar(n_, Rational(1)));
        for (std::size_t k = j + 1; k < idx.size(); ++k) right = wedge(right, Form::dx(n_, idx[k]));
        const Form mid = with_generator(g, Generator{true, Scalar(n_), idx[j]});
        out += wedge(wedge(left, mid), right) * sign(odd(g.degree() * static_cast<int>(j)));
      }
    }
    return out;
  }

  // [[a, b]] for arbitrary a, b: swap with graded antisymmetry and expand.
  Form general(const Form& a, const Form& b) {
    Form out(n_);
    for (const auto& [p, ap] : by_degree(a))
      for (const auto& [q, bq] : by_degree(b)) out -= swapped(bq, q, ap) * sign(odd(p * q));
    return out;
  }

  Form fastpath(FastpathKind kind, const Scalar& f, const Scalar& h) {
    switch (kind) {
      case FastpathKind::ff: return ff(f, h);
      case FastpathKind::f_dh: return f_dh(f, h);
      case FastpathKind::df_dh: return df_dh(f, h, false);
      case FastpathKind::df_dh_koszul: return df_dh(f, h, true);
    }
    throw InternalError("unknown fast path kind");
  }

 private:
  // [[b, a]] with b homogeneous of degree q, a arbitrary, expanded in a.
  Form swapped(const Form& b, int q, const Form& a) {
    Form out(n_);
    for (const auto& [mask, coeff] : a.terms()) {
      const Generator fn{false, coeff, -1};
      out += wedge(-generator_first(fn, b), Form::monomial(n_, mask, Scalar(n_, Rational(1))));
      std::vector<int> idx;
      for (int v = 0; v < n_; ++v)
        if (mask & (WedgeMask{1} << v)) idx.push_back(v);
      for (std::size_t j = 0; j < idx.size(); ++j) {
        Form left = Form(n_, coeff);
        for (std::size_t k = 0; k < j; ++k) left = wedge(left, Form::dx(n_, idx[k]));
        Form right(n_, Scalar(n_, Rational(1)));
        for (std::size_t k = j + 1; k < idx.size(); ++k) right = wedge(right, Form::dx(n_, idx[k]));
        // [[b, dx]] = -(-1)^{q} [[dx, b]]
        const Form mid = generator_first(Generator{true, Scalar(n_), idx[j]}, b) * sign(!odd(q));
        out += wedge(wedge(left, mid), right) * sign(odd(q * static_cast<int>(j)));
      }
    }
    return out;
  }

  Form with_generator(const Generator& g, const Generator& h) {
    const Scalar x = g.exact ? Scalar::variable(n_, g.var) : g.f;
    const Scalar y = h.exact ? Scalar::variable(n_, h.var) : h.f;
    if (!g.exact && !h.exact) return ff(x, y);
    if (!g.exact && h.exact) return f_dh(x, y);
    if (g.exact && h.exact) return df_dh(x, y, true);
    return -f_dh(y, x);  // [[dx, h]] = -[[h, dx]]
  }

  const std::map<int, VVF>& even_components(const Scalar& f) {
    const std::string key = f.to_string(chart_.coordinates());
    auto it = even_.find(key);
    if (it != even_.end()) return it->second;
    std::map<int, VVF> ks;
    for (const auto& [p, k] : k_even(chart_, f).components) ks.emplace(p, -k);
    return even_.emplace(key, std::move(ks)).first->second;
  }

  const std::map<int, VVF>& odd_components(const Scalar& f) {
    const std::string key = f.to_string(chart_.coordinates());
    auto it = odd_.find(key);
    if (it != odd_.end()) return it->second;
    return odd_.emplace(key, k_odd(chart_, f).components).first->second;
  }

  Form ff(const Scalar& f, const Scalar& h) {
    if (f.is_zero() || h.is_zero()) return Form(n_);
    const VVF xh = VVF::from_vector_field(chart_.hamiltonian_field(h));
    Form out(n_, chart_.poisson(f, h));
    for (const auto& [p, k] : even_components(f)) out += curvature_pair(chart_, k, xh);
    return out;
  }

  Form f_dh(const Scalar& f, const Scalar& h) {
    if (f.is_zero() || h.is_zero()) return Form(n_);
    const VVF xh = VVF::from_vector_field(chart_.hamiltonian_field(h));
    const VVF dxh = chart_.dnabla(xh);
    Form out = differential(n_, chart_.poisson(f, h));
    for (const auto& [p, k] : even_components(f)) {
      const VVF dk = chart_.dnabla(k);
      out -= pair_with(chart_.symplectic(), dk, xh);
      out += curvature_pair(chart_, dk, xh) + curvature_pair(chart_, k, dxh);
    }
    return out;
  }

  Form df_dh(const Scalar& f, const Scalar& h, bool koszul) {
    if (f.is_zero() || h.is_zero()) return Form(n_);
    const Form df = differential(n_, f), dh = differential(n_, h);
    if (df.is_zero() || dh.is_zero()) return Form(n_);
    const VVF xh = VVF::from_vector_field(chart_.hamiltonian_field(h));
    const VVF dxh = chart_.dnabla(xh);
    const VVF sharp_df = VVF::from_vector_field(chart_.sharp(df));
    Form out(n_, chart_.g(chart_.sharp(df), chart_.sharp(dh)));
    out += pair_with(chart_.metric(), chart_.dnabla(sharp_df), dxh);
    out += curvature_pair(chart_, sharp_df, xh);
    for (const auto& [p, k] : odd_components(f)) {
      const VVF dk = chart_.dnabla(k);
      out += pair_with(chart_.symplectic(), xh, dk);
      out += curvature_pair(chart_, dk, xh);
      out += koszul ? -curvature_pair(chart_, k, dxh) : curvature_pair(chart_, k, dxh);
    }
    return out;
  }

  const ChartGeometry& chart_;
  int n_;
  std::map<std::string, std::map<int, VVF>> even_;
  std::map<std::string, std::map<int, VVF>> odd_;
};

}  // namespace

HamiltonianSolver::HamiltonianSolver(ChartGeometry chart, GradedTwoForm theta)
    : chart_(std::make_shared<const ChartGeometry>(std::move(chart))), theta_(std::move(theta)) {}

const HamiltonianSolution& HamiltonianSolver::solve(const Form& a) {
  if (a.dim() != chart_->dim()) throw UsageError("form dimension does not match the chart");
  const std::string key = cache_key(*chart_, a);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  return cache_.emplace(key, solve_hamiltonian(*chart_, theta_, a)).first->second;
}

Form hamiltonian_bracket(HamiltonianSolver& solver, const Form& a, const Form& b) {
  if (a.is_zero() || b.is_zero()) return Form(solver.chart().dim());
  return solver.derivation(a).apply(b);
}

HamiltonianSolver ks_solver(const ChartGeometry& chart) { return HamiltonianSolver(chart, build_theta_ks(chart)); }

HamiltonianSolver even_solver(const ChartGeometry& chart) {
  return HamiltonianSolver(chart, build_theta(chart, ThetaVariant::omega_g));
}

Form koszul_operator(const ChartGeometry& chart, const Form& a) {
  const int n = chart.dim();
  const Matrix& lambda = chart.poisson_bivector();
  auto i_lambda = [&](const Form& x) {
    Form out(n);
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        if (lambda[p][q].is_zero()) continue;
        const Form inner = insert_vector(VectorField::coordinate(n, p), x);
        if (inner.is_zero()) continue;
        out += insert_vector(VectorField::coordinate(n, q), inner) * lambda[p][q];
      }
    return out;
  };
  return i_lambda(exterior_derivative(a)) - exterior_derivative(i_lambda(a));
}

Form ks_bracket_generator(const ChartGeometry& chart, const Form& a, const Form& b) {
  const int n = chart.dim();
  Form out(n);
  for (const auto& [p, ap] : by_degree(a)) {
    const Form dab = koszul_operator(chart, wedge(ap, b));
    const Form term = dab - wedge(koszul_operator(chart, ap), b) - wedge(ap, koszul_operator(chart, b)) * sign(odd(p));
    out += term * sign(odd(p));
  }
  return out;
}

Form bracket_fastpath(const ChartGeometry& chart, FastpathKind kind, const Scalar& f, const Scalar& h) {
  FastpathEngine engine(chart);
  return engine.fastpath(kind, f, h);
}

Form bracket_fastpath_general(const ChartGeometry& chart, const Form& a, const Form& b) {
  FastpathEngine engine(chart);
  return engine.general(a, b);
}

DefectResult d_defect(HamiltonianSolver& even, const GradedTwoForm& theta_ks, const Form& a, const Form& b) {
  const ChartGeometry& chart = even.chart();
  const Form da = exterior_derivative(a), db = exterior_derivative(b);
  const Form d_ab = exterior_derivative(hamiltonian_bracket(even, a, b));
  const Form da_b = hamiltonian_bracket(even, da, b);
  DefectResult r;
  r.left = d_ab - da_b - hamiltonian_bracket(even, a, db);
  r.right = eval_graded(chart, theta_ks, even.derivation(a), even.derivation(b));
  r.right_swapped = eval_graded(chart, theta_ks, even.derivation(b), even.derivation(a));
  r.left_koszul = d_ab - da_b;
  for (const auto& [p, ap] : by_degree(a)) r.left_koszul -= hamiltonian_bracket(even, ap, db) * sign(odd(p));
  return r;
}

CorollaryResult d_defect_corollary(HamiltonianSolver& even, const GradedTwoForm& theta_ks, const Form& a) {
  const ChartGeometry& chart = even.chart();
  const int n = chart.dim();
  CorollaryResult r{even.derivation(exterior_derivative(a)), Derivation(n), Derivation(n)};
  const Derivation d = Derivation::exterior(n);
  for (const auto& [p, ap] : by_degree(a)) {
    const Derivation& dap = even.derivation(ap);
    const Derivation comm = commutator(d, dap);
    const Derivation inv = solve_graded(chart, even.theta(), iota_derivation(chart, dap, theta_ks)).derivation;
    r.right += comm + (odd(p) ? -inv : inv);
    r.right_opposite += comm + (odd(p) ? inv : -inv);
  }
  return r;
}

}  // namespace gradsym
