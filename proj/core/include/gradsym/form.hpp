#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "gradsym/rational_function.hpp"

namespace gradsym {

/// A wedge monomial dx^{i_1} ^ ... ^ dx^{i_p} with i_1 < ... < i_p, stored as
/// the bit set {i_1, ..., i_p}.
using WedgeMask = std::uint32_t;

inline int mask_degree(WedgeMask m) { return std::popcount(m); }

/// Sign of dx^A ^ dx^B relative to dx^{A u B}; 0 if A and B overlap.
int wedge_sign(WedgeMask a, WedgeMask b);

struct MaskOrder {
  bool operator()(WedgeMask a, WedgeMask b) const {
    const int da = mask_degree(a), db = mask_degree(b);
    return da != db ? da < db : a < b;
  }
};

/// Differential form on a coordinate chart of dimension `dim`, possibly of
/// mixed degree. Zero coefficients are never stored.
class Form {
 public:
  explicit Form(int dim = 0) : dim_(dim) {}
  Form(int dim, const Scalar& function);  // 0-form

  static Form zero(int dim) { return Form(dim); }
  static Form constant(int dim, const Rational& c) { return Form(dim, Scalar(dim, c)); }
  static Form coordinate(int dim, int var) { return Form(dim, Scalar::variable(dim, var)); }
  /// The exact 1-form dx^var.
  static Form dx(int dim, int var);
  static Form monomial(int dim, WedgeMask mask, const Scalar& coefficient);

  int dim() const { return dim_; }
  const std::map<WedgeMask, Scalar, MaskOrder>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(WedgeMask mask) const;

  /// Degrees with a nonzero homogeneous component, ascending.
  std::vector<int> degrees() const;
  bool is_homogeneous() const { return degrees().size() <= 1; }
  /// Degree of a nonzero homogeneous form; `fallback` for zero.
  int degree(int fallback = 0) const;
  Form part(int degree) const;
  Form part_up_to(int max_degree) const;
  /// Degree-0 component as a function.
  Scalar function_part() const { return coefficient(0); }

  Form operator-() const;
  Form& operator+=(const Form& other);
  Form& operator-=(const Form& other);
  Form& operator*=(const Scalar& f);
  Form& operator*=(const Rational& c);
  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  friend Form operator*(Form a, const Scalar& f) { return a *= f; }
  friend Form operator*(const Scalar& f, Form a) { return a *= f; }
  friend Form operator*(Form a, const Rational& c) { return a *= c; }
  friend Form operator*(const Rational& c, Form a) { return a *= c; }
  friend bool operator==(const Form& a, const Form& b) { return a.dim_ == b.dim_ && a.terms_ == b.terms_; }

  std::string to_string(std::span<const std::string> names) const;

 private:
  void add_term(WedgeMask mask, const Scalar& c);

  int dim_;
  std::map<WedgeMask, Scalar, MaskOrder> terms_;
};

/// Exterior product; graded commutative.
Form wedge(const Form& a, const Form& b);
/// Exterior derivative.
Form exterior_derivative(const Form& a);

/// Vector field: one coefficient per coordinate direction.
class VectorField {
 public:
  explicit VectorField(int dim = 0) : components_(dim, Scalar(dim)) {}
  explicit VectorField(std::vector<Scalar> components) : components_(std::move(components)) {}
  static VectorField coordinate(int dim, int var);

  int dim() const { return static_cast<int>(components_.size()); }
  const Scalar& operator[](int a) const { return components_[a]; }
  Scalar& operator[](int a) { return components_[a]; }
  const std::vector<Scalar>& components() const { return components_; }
  bool is_zero() const;

  VectorField operator-() const;
  VectorField& operator+=(const VectorField& o);
  VectorField& operator-=(const VectorField& o);
  friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
  friend VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
  friend VectorField operator*(const Scalar& f, VectorField v);
  friend bool operator==(const VectorField&, const VectorField&) = default;

  /// X(f) = sum_a X^a d_a f.
  Scalar apply(const Scalar& f) const;

  std::string to_string(std::span<const std::string> names) const;

 private:
  std::vector<Scalar> components_;
};

/// Lie bracket of vector fields.
VectorField lie_bracket(const VectorField& x, const VectorField& y);

/// Interior product i_X.
Form insert_vector(const VectorField& x, const Form& a);
/// Lie derivative by Cartan's formula.
Form lie_derivative(const VectorField& x, const Form& a);
/// Evaluates a form on vector fields: alpha(X_1, ..., X_p) = i_{X_p} ... i_{X_1} alpha
/// (determinant convention, so (dx ^ dy)(d_x, d_y) = 1).
Form contract(const Form& a, std::span<const VectorField> vectors);

/// Element of Omega^k(M; TM): component a is a k-form, the coefficient of d_a.
class VectorValuedForm {
 public:
  VectorValuedForm() = default;
  VectorValuedForm(int dim, int degree) : degree_(degree), components_(dim, Form(dim)) {}
  /// Throws UsageError if the components are not all homogeneous of `degree`.
  VectorValuedForm(int degree, std::vector<Form> components);
  static VectorValuedForm from_vector_field(const VectorField& x);
  /// Id = sum_a dx^a (x) d_a.
  static VectorValuedForm identity(int dim);

  int dim() const { return static_cast<int>(components_.size()); }
  int degree() const { return degree_; }
  const Form& operator[](int a) const { return components_[a]; }
  const std::vector<Form>& components() const { return components_; }
  void set(int a, Form f);
  bool is_zero() const;

  /// Only meaningful for degree 0.
  VectorField as_vector_field() const;

  VectorValuedForm operator-() const;
  VectorValuedForm& operator+=(const VectorValuedForm& o);
  VectorValuedForm& operator-=(const VectorValuedForm& o);
  friend VectorValuedForm operator+(VectorValuedForm a, const VectorValuedForm& b) { return a += b; }
  friend VectorValuedForm operator-(VectorValuedForm a, const VectorValuedForm& b) { return a -= b; }
  friend VectorValuedForm operator*(const Rational& c, VectorValuedForm k);
  friend bool operator==(const VectorValuedForm& a, const VectorValuedForm& b);

  /// beta ^ K, componentwise.
  friend VectorValuedForm wedge(const Form& beta, const VectorValuedForm& k);

  /// Applies a pointwise endomorphism matrix (row = output index) componentwise.
  VectorValuedForm transformed(const std::vector<std::vector<Scalar>>& matrix) const;

  /// Value on vector fields: K(X_1, ..., X_k) as a vector field.
  VectorField evaluate(std::span<const VectorField> vectors) const;

  std::string to_string(std::span<const std::string> names) const;

 private:
  int degree_ = 0;
  std::vector<Form> components_;
};

/// Algebraic derivation i_K of degree deg K - 1: kills functions, sends
/// dx^a to K^a, extended by the graded Leibniz rule.
Form insert_vvform(const VectorValuedForm& k, const Form& a);

}  // namespace gradsym
