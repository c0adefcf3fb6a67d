#pragma once

#include <map>
#include <vector>

#include "gradsym/graded_form.hpp"

namespace gradsym {

/// A derivation D solving iota_D Theta = mu, with its coefficients in the
/// {nabla, i} basis: D = sum_p (nabla_{K_p} + i_{B_p}) where K_p and B_p are
/// vector-valued p-forms.
struct HamiltonianSolution {
  Form source;  // the Hamiltonian when mu = d^G source; zero otherwise
  Derivation derivation;
  std::map<int, VectorValuedForm> lie;        // K_p, keyed by form degree p
  std::map<int, VectorValuedForm> insertion;  // B_p, keyed by form degree p
};

/// Solves iota_D Theta = d^G a.
HamiltonianSolution solve_hamiltonian(const ChartGeometry& chart, const GradedTwoForm& theta, const Form& a);
/// Solves iota_D Theta = mu for an arbitrary graded 1-form (Theta^{-1} mu).
HamiltonianSolution solve_graded(const ChartGeometry& chart, const GradedTwoForm& theta, const GradedOneForm& mu);

/// Result of a recursion fast path: the components by degree and the assembled derivation.
struct RecursionResult {
  std::map<int, VectorValuedForm> components;
  Derivation derivation;
};

/// Even components of D_f from K^0 (w(Y, K^0) = Y(f)) and K^{2i} = -J^{-1}(R(_,_) K^{2(i-1)}).
RecursionResult k_even(const ChartGeometry& chart, const Scalar& f);

/// Sign used for the higher odd recursion K^{2(i+1)+1} = s J^{-1}(R(_,_) K^{2i+1}).
enum class OddRecursionSign { plus, minus };

/// Odd components of D_df: K^1 from w(Y, K^1) = nabla_Y(df), then the odd
/// recursion; the derivation is i_{sharp df} + nabla_{K^odd}.
RecursionResult k_odd(const ChartGeometry& chart, const Scalar& f, OddRecursionSign sign = OddRecursionSign::minus);

}  // namespace gradsym
