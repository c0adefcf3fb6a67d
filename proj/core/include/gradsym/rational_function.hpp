#pragma once

#include <span>
#include <string>

#include "gradsym/polynomial.hpp"

namespace gradsym {

/// Element of Q(x_1, ..., x_n). Always stored in lowest terms with a monic
/// denominator, so two equal functions have identical representations and
/// zero is exactly 0/1.
class RationalFunction {
 public:
  explicit RationalFunction(int nvars = 0);
  RationalFunction(int nvars, const Rational& constant);
  explicit RationalFunction(Polynomial numerator);

  /// Builds num/den in canonical form. Throws DomainError if den == 0.
  static RationalFunction fraction(Polynomial numerator, Polynomial denominator);
  static RationalFunction variable(int nvars, int var);

  int nvars() const { return num_.nvars(); }
  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  Rational constant_value() const { return num_.constant_value(); }

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& other);
  RationalFunction& operator-=(const RationalFunction& other);
  RationalFunction& operator*=(const RationalFunction& other);
  RationalFunction& operator/=(const RationalFunction& other);
  RationalFunction& operator*=(const Rational& scalar);

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(RationalFunction a, const Rational& s) { return a *= s; }
  friend RationalFunction operator*(const Rational& s, RationalFunction a) { return a *= s; }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  RationalFunction inverse() const;
  RationalFunction pow(int exponent) const;

  /// Partial derivative with respect to coordinate `var` (quotient rule).
  RationalFunction partial(int var) const;

  /// Exact substitution. Throws EvaluationError if the denominator vanishes.
  Rational evaluate(std::span<const Rational> point) const;

  std::string to_string(std::span<const std::string> names) const;

 private:
  RationalFunction(Polynomial num, Polynomial den, bool /*canonical*/)
      : num_(std::move(num)), den_(std::move(den)) {}

  Polynomial num_;
  Polynomial den_;
};

using Scalar = RationalFunction;

}  // namespace gradsym
