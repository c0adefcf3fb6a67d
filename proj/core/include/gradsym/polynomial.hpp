#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace gradsym {

using Rational = mpq_class;

inline constexpr int kMaxVariables = 8;

/// Exponent vector packed one byte per variable, variable 0 in the most
/// significant byte. Ordering is graded lexicographic.
class Monomial {
 public:
  constexpr Monomial() = default;

  static Monomial variable(int var, int power = 1);

  int exponent(int var) const {
    return static_cast<int>((bits_ >> shift(var)) & 0xffu);
  }
  int degree() const { return degree_; }
  bool is_one() const { return bits_ == 0; }

  Monomial with_exponent(int var, int power) const;
  bool divides(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Requires `b.divides(a)`.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  /// Componentwise minimum.
  friend Monomial gcd(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend bool operator<(const Monomial& a, const Monomial& b) {
    return a.degree_ != b.degree_ ? a.degree_ < b.degree_ : a.bits_ < b.bits_;
  }
  friend bool operator>(const Monomial& a, const Monomial& b) { return b < a; }

  std::uint64_t bits() const { return bits_; }

 private:
  static constexpr int shift(int var) { return 8 * (kMaxVariables - 1 - var); }

  std::uint64_t bits_ = 0;
  std::uint16_t degree_ = 0;
};

struct Term {
  Monomial monomial;
  Rational coefficient;
};

/// Sparse multivariate polynomial with rational coefficients in a fixed
/// number of variables. Terms are kept sorted by decreasing grlex order with
/// no zero coefficients, so equality is structural.
class Polynomial {
 public:
  explicit Polynomial(int nvars = 0);
  Polynomial(int nvars, const Rational& constant);
  Polynomial(int nvars, std::vector<Term> terms);  // normalizes

  static Polynomial variable(int nvars, int var);

  int nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one());
  }
  bool is_one() const;
  Rational constant_value() const;  // requires is_constant()
  const Term& leading_term() const { return terms_.front(); }
  const Rational& leading_coefficient() const { return terms_.front().coefficient; }
  int total_degree() const;
  int degree_in(int var) const;
  bool depends_on(int var) const { return degree_in(var) > 0; }

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Rational& scalar);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  Polynomial multiply_monomial(const Monomial& m, const Rational& c) const;
  Polynomial derivative(int var) const;
  Rational evaluate(std::span<const Rational> point) const;
  Polynomial pow(unsigned exponent) const;

  /// Quotient if `divisor` divides this polynomial exactly.
  std::optional<Polynomial> divide_exact(const Polynomial& divisor) const;

  /// Scales so the leading coefficient is 1 (zero stays zero).
  Polynomial monic() const;

  std::string to_string(std::span<const std::string> names) const;

 private:
  void normalize();

  int nvars_;
  std::vector<Term> terms_;
};

/// Monic greatest common divisor (0 only if both inputs are 0).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

}  // namespace gradsym
