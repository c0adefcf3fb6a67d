#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gradsym/derivation.hpp"
#include "gradsym/linalg.hpp"

namespace gradsym {

/// Components L_{i;jk} = L(d_i; d_j, d_k), antisymmetric in (j, k).
/// Indexed as l[i][j][k].
using LTensor = std::vector<std::vector<std::vector<Scalar>>>;

/// A coordinate chart carrying a pseudoriemannian metric g, a symplectic
/// form w and optionally a (1,2) tensor L. Every derived quantity is computed
/// once at construction, and construction fails on degenerate or non-closed
/// data.
class ChartGeometry {
 public:
  ChartGeometry(std::string name, std::vector<std::string> coordinates, Matrix metric,
                Matrix symplectic, std::optional<LTensor> l_tensor = std::nullopt);

  const std::string& name() const { return name_; }
  int dim() const { return static_cast<int>(coords_.size()); }
  const std::vector<std::string>& coordinates() const { return coords_; }
  const Matrix& metric() const { return g_; }
  const Matrix& metric_inverse() const { return g_inv_; }
  const Matrix& symplectic() const { return w_; }
  const std::optional<LTensor>& l_tensor() const { return l_; }
  bool has_l_tensor() const { return l_.has_value(); }
  /// Same chart with a different (or no) L tensor.
  ChartGeometry with_l_tensor(std::optional<LTensor> l) const;
  /// Renamed copy.
  ChartGeometry renamed(std::string name) const;

  /// Gamma^i_{jk}.
  const Scalar& christoffel(int i, int j, int k) const { return gamma_[i][j][k]; }
  /// R^a_{bcd}: R(d_c, d_d) d_b = R^a_{bcd} d_a with R(X,Y) = [nabla_X, nabla_Y] - nabla_[X,Y].
  const Scalar& curvature(int a, int b, int c, int d) const { return riemann_[a][b][c][d]; }
  /// R(U,V,W,Z) = -g(R(U,V)W, Z) on coordinate fields.
  Scalar curvature4(int u, int v, int w, int z) const;
  /// The endomorphism-valued 2-form: entry [a][b] is sum_{c<d} R^a_{bcd} dx^c ^ dx^d.
  const std::vector<std::vector<Form>>& curvature_forms() const { return curvature_forms_; }
  /// J^b_j = g^{bl} w_{jl}, so J d_j = J^b_j d_b and w(X,Y) = g(JX,Y).
  const Matrix& j_matrix() const { return j_; }
  const Matrix& j_inverse_matrix() const { return j_inv_; }
  /// Poisson bivector Lambda^{ab} = {x^a, x^b}.
  const Matrix& poisson_bivector() const { return lambda_; }

  Form omega_form() const;
  /// The (1,1) tensor J as a vector-valued 1-form.
  VectorValuedForm j_tensor() const;
  /// L(d_i; _, _) as a 2-form; zero without an L tensor.
  Form l_form(int i) const;

  Scalar g(const VectorField& x, const VectorField& y) const;
  Scalar omega(const VectorField& x, const VectorField& y) const;

  Form flat(const VectorField& x) const;
  /// Throws UsageError unless `a` is a homogeneous 1-form (or zero).
  VectorField sharp(const Form& a) const;

  /// Covariant derivative nabla_X Y.
  VectorField covariant(const VectorField& x, const VectorField& y) const;
  /// (d^nabla S)^i = dS^i + Gamma^i_{jk} dx^j ^ S^k.
  VectorValuedForm dnabla(const VectorValuedForm& s) const;
  /// nabla_X = L_X - i_{nabla X} as a derivation of forms.
  Derivation nabla(const VectorField& x) const;
  /// nabla_K = sum_a K^a ^ nabla_{d_a} for a vector-valued form K.
  Derivation nabla(const VectorValuedForm& k) const;
  /// The curvature endomorphism applied to the vector slot of K: (R K)^a = R^a_b ^ K^b.
  VectorValuedForm curvature_apply(const VectorValuedForm& k) const;
  /// Applies J^{-1} pointwise to the vector slot.
  VectorValuedForm j_inverse_apply(const VectorValuedForm& k) const;

  /// X_f with i_{X_f} w = df.
  VectorField hamiltonian_field(const Scalar& f) const;
  /// {f, h} = w(X_f, X_h).
  Scalar poisson(const Scalar& f, const Scalar& h) const;

  Scalar det_metric() const { return det_g_; }
  Scalar det_symplectic() const { return det_w_; }

 private:
  void compute_derived();

  std::string name_;
  std::vector<std::string> coords_;
  Matrix g_, w_;
  std::optional<LTensor> l_;

  Matrix g_inv_, w_inv_, j_, j_inv_, lambda_;
  Scalar det_g_, det_w_;
  std::vector<std::vector<std::vector<Scalar>>> gamma_;
  std::vector<std::vector<std::vector<std::vector<Scalar>>>> riemann_;
  std::vector<std::vector<Form>> curvature_forms_;
};

/// The tangent bundle of a base with metric g (in coordinates q^i), with
/// coordinates (q^i, v^i), the horizontal-lift metric built from the adapted
/// coframe and the symplectic form of the kinetic Lagrangian.
ChartGeometry tangent_lift_chart(const std::string& name, int base_dim, const Matrix& base_metric);

/// The canonical almost product structure of a tangent lift: +1 on vertical
/// lifts, -1 on horizontal lifts, as a matrix J^b_j.
Matrix tangent_lift_canonical_j(int base_dim, const Matrix& base_metric);

}  // namespace gradsym
