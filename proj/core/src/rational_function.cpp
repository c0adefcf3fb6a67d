#include "gradsym/rational_function.hpp"

#include "gradsym/errors.hpp"

namespace gradsym {

namespace {

Polynomial quotient(const Polynomial& a, const Polynomial& b) {
  if (b.is_one()) return a;
  auto q = a.divide_exact(b);
  if (!q) throw InternalError("rational function: inexact cofactor division");
  return *q;
}

}  // namespace

RationalFunction::RationalFunction(int nvars) : num_(nvars), den_(nvars, Rational(1)) {}

RationalFunction::RationalFunction(int nvars, const Rational& constant)
    : num_(nvars, constant), den_(nvars, Rational(1)) {}

RationalFunction::RationalFunction(Polynomial numerator)
    : num_(std::move(numerator)), den_(num_.nvars(), Rational(1)) {}

RationalFunction RationalFunction::fraction(Polynomial numerator, Polynomial denominator) {
  if (denominator.is_zero()) throw DomainError("division by the zero rational function");
  const int n = numerator.nvars();
  if (numerator.is_zero()) return RationalFunction(n);
  if (!denominator.is_constant()) {
    const Polynomial g = gcd(numerator, denominator);
    if (!g.is_one()) {
      numerator = quotient(numerator, g);
      denominator = quotient(denominator, g);
    }
  }
  const Rational lc = denominator.leading_coefficient();
  if (lc != 1) {
    const Rational s = 1 / lc;
    numerator *= s;
    denominator *= s;
  }
  return RationalFunction(std::move(numerator), std::move(denominator), true);
}

RationalFunction RationalFunction::variable(int nvars, int var) {
  return RationalFunction(Polynomial::variable(nvars, var));
}

RationalFunction RationalFunction::operator-() const { return RationalFunction(-num_, den_, true); }

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    Polynomial num = num_ + o.num_;
    if (den_.is_one() || num.is_zero()) {
      num_ = std::move(num);
      if (num_.is_zero()) den_ = Polynomial(nvars(), Rational(1));
      return *this;
    }
    return *this = fraction(std::move(num), den_);
  }
  const Polynomial g = gcd(den_, o.den_);
  if (g.is_one()) {
    // Coprime denominators: the sum is already in lowest terms.
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    if (num_.is_zero()) den_ = Polynomial(nvars(), Rational(1));
    return *this;
  }
  const Polynomial a = quotient(den_, g);
  const Polynomial b = quotient(o.den_, g);
  Polynomial num = num_ * b + o.num_ * a;
  if (num.is_zero()) return *this = RationalFunction(nvars());
  // Any common factor of num and a*b*g divides g.
  const Polynomial h = gcd(num, g);
  Polynomial den = a * b * quotient(g, h);
  num = quotient(num, h);
  num_ = std::move(num);
  den_ = std::move(den);
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero() || b.is_zero()) return RationalFunction(a.nvars());
  if (a.den_.is_one() && b.den_.is_one()) return RationalFunction(a.num_ * b.num_);
  const Polynomial g1 = gcd(a.num_, b.den_);
  const Polynomial g2 = gcd(b.num_, a.den_);
  Polynomial num = quotient(a.num_, g1) * quotient(b.num_, g2);
  Polynomial den = quotient(a.den_, g2) * quotient(b.den_, g1);
  // Cofactors of monic gcds keep monic denominators monic, but the numerator
  // quotient may carry the gcd's scalar; renormalize the leading coefficient.
  const Rational lc = den.leading_coefficient();
  if (lc != 1) {
    num *= Rational(1 / lc);
    den *= Rational(1 / lc);
  }
  return RationalFunction(std::move(num), std::move(den), true);
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) { return *this = *this * o; }

RationalFunction& RationalFunction::operator*=(const Rational& s) {
  if (s == 0) return *this = RationalFunction(nvars());
  num_ *= s;
  return *this;
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw DomainError("division by the zero rational function");
  const Rational lc = num_.leading_coefficient();
  return RationalFunction(den_ * Rational(1 / lc), num_ * Rational(1 / lc), true);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) { return a * b.inverse(); }

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) { return *this = *this / o; }

RationalFunction RationalFunction::pow(int exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  return RationalFunction(num_.pow(exponent), den_.pow(exponent), true);
}

RationalFunction RationalFunction::partial(int var) const {
  if (var < 0 || var >= nvars()) throw UsageError("coordinate index out of range");
  if (den_.is_one()) return RationalFunction(num_.derivative(var));
  const Polynomial dd = den_.derivative(var);
  if (dd.is_zero()) return fraction(num_.derivative(var), den_);
  // (n' d - n d') / d^2 with the shared factor gcd(d, d') removed first.
  const Polynomial g = gcd(den_, dd);
  const Polynomial dg = quotient(den_, g);
  Polynomial num = num_.derivative(var) * dg - num_ * quotient(dd, g);
  return fraction(std::move(num), den_ * dg);
}

Rational RationalFunction::evaluate(std::span<const Rational> point) const {
  if (static_cast<int>(point.size()) != nvars()) throw UsageError("point dimension mismatch");
  const Rational d = den_.evaluate(point);
  if (d == 0) throw EvaluationError("denominator vanishes at evaluation point");
  return num_.evaluate(point) / d;
}

std::string RationalFunction::to_string(std::span<const std::string> names) const {
  if (den_.is_one()) return num_.to_string(names);
  auto wrap = [&](const Polynomial& p) {
    const std::string s = p.to_string(names);
    return p.terms().size() > 1 ? "(" + s + ")" : s;
  };
  return wrap(num_) + "/" + wrap(den_);
}

}  // namespace gradsym
