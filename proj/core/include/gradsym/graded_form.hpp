#pragma once

#include <vector>

#include "gradsym/geometry.hpp"

namespace gradsym {

/// Which local basis of derivations a table is written in. Index e < n is
/// L_{d_e} (or nabla_{d_e}), index n + a is i_{d_a}.
enum class Basis { lie, nabla };

/// The basic derivation with index e in the given basis.
Derivation basic_derivation(const ChartGeometry& chart, Basis basis, int e);
/// Degree of the basic derivation with index e: 0 or -1.
inline int basic_degree(int dim, int e) { return e < dim ? 0 : -1; }

/// Left coefficients of a derivation over a basis: D = sum_e c[e] E_e.
std::vector<Form> decompose(const ChartGeometry& chart, const Derivation& d, Basis basis);

/// A graded 1-form tabulated on the 2n basic derivations.
struct GradedOneForm {
  Basis basis = Basis::lie;
  int weight = 0;
  std::vector<Form> values;

  int dim() const { return static_cast<int>(values.size()) / 2; }
  friend bool operator==(const GradedOneForm& a, const GradedOneForm& b);
};

/// A graded 2-form tabulated on ordered pairs of basic derivations.
struct GradedTwoForm {
  Basis basis = Basis::lie;
  int weight = 0;
  std::vector<std::vector<Form>> values;

  int dim() const { return static_cast<int>(values.size()) / 2; }
  friend bool operator==(const GradedTwoForm& a, const GradedTwoForm& b);
};

GradedOneForm operator+(const GradedOneForm& a, const GradedOneForm& b);
GradedOneForm operator-(const GradedOneForm& a, const GradedOneForm& b);
GradedOneForm operator*(const Rational& c, const GradedOneForm& a);
GradedTwoForm operator+(const GradedTwoForm& a, const GradedTwoForm& b);
GradedTwoForm operator-(const GradedTwoForm& a, const GradedTwoForm& b);
GradedTwoForm operator*(const Rational& c, const GradedTwoForm& a);

/// <D; lambda>.
Form eval_graded(const ChartGeometry& chart, const GradedOneForm& l, const Derivation& d);
/// <D1, D2; Theta>, with <b E1, c E2> = b ^ (-1)^{|c||E1|} c ^ <E1, E2>.
Form eval_graded(const ChartGeometry& chart, const GradedTwoForm& t, const Derivation& d1, const Derivation& d2);

/// Rewrites a table in another basis.
GradedOneForm to_basis(const ChartGeometry& chart, const GradedOneForm& l, Basis basis);
GradedTwoForm to_basis(const ChartGeometry& chart, const GradedTwoForm& t, Basis basis);

/// <i_X; lambda_g> = flat X, <L_X; lambda_g> = d flat X (+ L(X; _, _) when include_l).
/// A chart without an L tensor is treated as L = 0.
GradedOneForm build_lambda(const ChartGeometry& chart, bool include_l);
/// <i_X; lambda_w> = 0, <L_X; lambda_w> = w(X, _).
GradedOneForm build_lambda_omega(const ChartGeometry& chart);

/// <D; d^G a> = D(a).
GradedOneForm dG_function(const ChartGeometry& chart, const Form& a, Basis basis = Basis::lie);
/// <D1, D2; d^G l> = D1<D2> - (-1)^{|D1||D2|} D2<D1> - <[D1, D2]>.
GradedTwoForm dG_graded1(const ChartGeometry& chart, const GradedOneForm& l);
/// Three-argument d^G of a tabulated 2-form, evaluated on arbitrary derivations.
Form dG_graded2(const ChartGeometry& chart, const GradedTwoForm& t, const Derivation& d1, const Derivation& d2,
                const Derivation& d3);

enum class ThetaVariant { omega_only, omega_g, omega_g_l };
/// Theta_w, Theta_w + 1/2 d^G lambda_g, or Theta_w + 1/2 d^G lambda_{g,L}.
GradedTwoForm build_theta(const ChartGeometry& chart, ThetaVariant variant);
/// Theta_{w,g} written directly from its closed-form expression in the {L, i} basis.
GradedTwoForm build_theta_closed_form(const ChartGeometry& chart);
/// Theta_{w,g} written directly from its closed-form expression in the {nabla, i} basis.
GradedTwoForm build_theta_nabla_closed_form(const ChartGeometry& chart);
/// Theta_KS = d^G lambda_w.
GradedTwoForm build_theta_ks(const ChartGeometry& chart);

/// Matrix of degree-0 parts of the table entries.
Matrix degree_zero_block(const GradedTwoForm& t);

/// <E; iota_D Theta> = <E, D; Theta>.
GradedOneForm iota_derivation(const ChartGeometry& chart, const Derivation& d, const GradedTwoForm& t);
/// iota_D lambda = <D; lambda>.
Form iota_derivation(const ChartGeometry& chart, const Derivation& d, const GradedOneForm& l);

/// L^G_D = iota_D d^G + d^G iota_D.
GradedOneForm lieG(const ChartGeometry& chart, const Derivation& d, const GradedOneForm& l);
GradedTwoForm lieG(const ChartGeometry& chart, const Derivation& d, const GradedTwoForm& t);

/// Homogeneous parts of a possibly mixed-degree derivation, with their degrees.
std::vector<std::pair<int, Derivation>> homogeneous_parts(const Derivation& d);
/// Negates the odd-degree parts of a form: a -> (-1)^{|a|} a.
Form parity_twist(const Form& a);

}  // namespace gradsym
