#pragma once

#include <map>
#include <memory>
#include <string>

#include "gradsym/hamiltonian.hpp"

namespace gradsym {

/// Solves for Hamiltonian derivations against one fixed graded symplectic
/// form, remembering every solution by its source form.
class HamiltonianSolver {
 public:
  HamiltonianSolver(ChartGeometry chart, GradedTwoForm theta);

  const ChartGeometry& chart() const { return *chart_; }
  const GradedTwoForm& theta() const { return theta_; }

  const HamiltonianSolution& solve(const Form& a);
  const Derivation& derivation(const Form& a) { return solve(a).derivation; }

 private:
  std::shared_ptr<const ChartGeometry> chart_;
  GradedTwoForm theta_;
  std::map<std::string, HamiltonianSolution> cache_;
};

/// [[a, b]] = D_a(b), with D_a the Hamiltonian derivation of a for the solver's form.
Form hamiltonian_bracket(HamiltonianSolver& solver, const Form& a, const Form& b);

/// Even bracket for Theta_{w,g} (or any even form held by the solver).
inline Form even_bracket(HamiltonianSolver& solver, const Form& a, const Form& b) {
  return hamiltonian_bracket(solver, a, b);
}

enum class KsMethod { hamiltonian, generator };

/// Calibration: the Hamiltonian method's bracket D_a(b) for Theta_KS equals
/// this sign times the generator method's bracket, on every chart.
inline constexpr int kKsCalibrationSign = -1;

/// Koszul-Schouten bracket from the second-order operator D = [i_Lambda, d],
/// Lambda = -w^{-1}: [[a,b]] = (-1)^|a| (D(a^b) - Da^b - (-1)^|a| a^Db).
/// On exact 1-forms it gives [[df,dh]] = d{f,h}.
Form ks_bracket_generator(const ChartGeometry& chart, const Form& a, const Form& b);
/// The operator [i_Lambda, d] = i_Lambda d - d i_Lambda.
Form koszul_operator(const ChartGeometry& chart, const Form& a);

/// Solver for Theta_KS on the chart.
HamiltonianSolver ks_solver(const ChartGeometry& chart);
/// Solver for Theta_{w,g} on the chart.
HamiltonianSolver even_solver(const ChartGeometry& chart);

/// df_dh_koszul is [[df,dh]] with the graded Leibniz sign (-1)^{|K|} = -1
/// on the R(K^{2i+1}, d^nabla X_h) terms.
enum class FastpathKind { ff, f_dh, df_dh, df_dh_koszul };

/// The closed-form brackets [[f,h]], [[f,dh]], [[df,dh]] for Theta_{w,g},
/// built from the recursion components and the curvature. The even
/// components enter normalized as K^0 = X_f; #df is read as the metric sharp.
Form bracket_fastpath(const ChartGeometry& chart, FastpathKind kind, const Scalar& f, const Scalar& h);

/// Even bracket of arbitrary forms assembled from the fast paths by
/// bilinearity, the Leibniz rule and graded antisymmetry. Exact 1-form pairs
/// use df_dh_koszul.
Form bracket_fastpath_general(const ChartGeometry& chart, const Form& a, const Form& b);

struct DefectResult {
  Form left;           // d[[a,b]] - [[da,b]] - [[a,db]]
  Form right;          // <D_a, D_b; Theta_KS>
  Form left_koszul;    // d[[a,b]] - [[da,b]] - (-1)^|a| [[a,db]]
  Form right_swapped;  // <D_b, D_a; Theta_KS> = (iota_{D_a} Theta_KS)(D_b)
};

/// Derivative defect of the even bracket; a may mix degrees.
DefectResult d_defect(HamiltonianSolver& even, const GradedTwoForm& theta_ks, const Form& a, const Form& b);

struct CorollaryResult {
  Derivation left;            // D_{da}
  Derivation right;           // [d, D_a] + (-1)^|a| Theta^{-1}(iota_{D_a} Theta_KS)
  Derivation right_opposite;  // the same with -(-1)^|a|
};

/// Both sides of the derivation-level form of the defect identity.
CorollaryResult d_defect_corollary(HamiltonianSolver& even, const GradedTwoForm& theta_ks, const Form& a);

}  // namespace gradsym
