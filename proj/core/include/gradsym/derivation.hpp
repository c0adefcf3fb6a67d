#pragma once

#include <functional>
#include <map>
#include <span>
#include <string>

#include "gradsym/form.hpp"

namespace gradsym {

/// Homogeneous piece of a derivation of degree k: L_K + i_{L'} with
/// K in Omega^k(M;TM) and L' in Omega^{k+1}(M;TM).
struct DerivationPart {
  VectorValuedForm lie;        // K
  VectorValuedForm algebraic;  // L'
};

/// A derivation of Omega(M) stored in Frolicher-Nijenhuis normal form as a
/// finite sum of homogeneous parts, keyed by degree (which may be -1).
///
/// A derivation is determined by its values on the coordinate functions and
/// their differentials; `from_action` rebuilds the normal form from those
/// values, and every algebraic operation here goes through it.
class Derivation {
 public:
  explicit Derivation(int dim = 0) : dim_(dim) {}

  /// L_K + i_{L'} for homogeneous K of degree k and L' of degree k + 1.
  static Derivation from_parts(const VectorValuedForm& lie, const VectorValuedForm& algebraic);
  /// L_X for a vector field X (degree 0).
  static Derivation lie(const VectorField& x);
  /// L_K for a vector-valued k-form (degree k).
  static Derivation lie(const VectorValuedForm& k);
  /// i_X for a vector field X (degree -1).
  static Derivation insertion(const VectorField& x);
  /// i_K for a vector-valued k-form (degree k - 1).
  static Derivation insertion(const VectorValuedForm& k);
  /// d = L_Id.
  static Derivation exterior(int dim);
  /// Rebuilds the normal form of the derivation acting as `op`.
  static Derivation from_action(int dim, const std::function<Form(const Form&)>& op);

  int dim() const { return dim_; }
  const std::map<int, DerivationPart>& parts() const { return parts_; }
  bool is_zero() const { return parts_.empty(); }
  /// Degrees with a nonzero homogeneous part.
  std::vector<int> degrees() const;
  Derivation part(int degree) const;
  /// Sum of the parts of degree <= max_degree.
  Derivation truncated(int max_degree) const;

  Form apply(const Form& a) const;
  Form operator()(const Form& a) const { return apply(a); }

  Derivation operator-() const;
  Derivation& operator+=(const Derivation& o);
  Derivation& operator-=(const Derivation& o);
  friend Derivation operator+(Derivation a, const Derivation& b) { return a += b; }
  friend Derivation operator-(Derivation a, const Derivation& b) { return a -= b; }
  friend bool operator==(const Derivation& a, const Derivation& b);

  /// beta * D, acting as alpha -> beta ^ D(alpha).
  Derivation left_multiplied(const Form& beta) const;

  std::string to_string(std::span<const std::string> names) const;

 private:
  void add_part(int degree, const DerivationPart& p);
  void prune();

  int dim_;
  std::map<int, DerivationPart> parts_;
};

/// Graded commutator [D, E] = D E - (-1)^{|D||E|} E D on homogeneous parts.
Derivation commutator(const Derivation& d, const Derivation& e);

/// Applies a single homogeneous FN pair to a form.
Form apply_derivation(const Derivation& d, const Form& a);

}  // namespace gradsym
