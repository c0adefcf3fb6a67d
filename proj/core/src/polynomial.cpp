#include "gradsym/polynomial.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace gradsym {

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::variable(int var, int power) {
  return Monomial{}.with_exponent(var, power);
}

Monomial Monomial::with_exponent(int var, int power) const {
  if (power < 0 || power > 255) throw std::overflow_error("monomial exponent out of range");
  Monomial m = *this;
  const int old = exponent(var);
  m.bits_ &= ~(std::uint64_t{0xff} << shift(var));
  m.bits_ |= std::uint64_t(power) << shift(var);
  m.degree_ = static_cast<std::uint16_t>(m.degree_ - old + power);
  return m;
}

bool Monomial::divides(const Monomial& other) const {
  for (int v = 0; v < kMaxVariables; ++v)
    if (exponent(v) > other.exponent(v)) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  if (a.degree_ + b.degree_ > 255) {
    for (int v = 0; v < kMaxVariables; ++v)
      if (a.exponent(v) + b.exponent(v) > 255) throw std::overflow_error("monomial exponent overflow");
  }
  m.bits_ = a.bits_ + b.bits_;
  m.degree_ = static_cast<std::uint16_t>(a.degree_ + b.degree_);
  return m;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  assert(b.divides(a));
  Monomial m;
  m.bits_ = a.bits_ - b.bits_;
  m.degree_ = static_cast<std::uint16_t>(a.degree_ - b.degree_);
  return m;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (int v = 0; v < kMaxVariables; ++v)
    m = m.with_exponent(v, std::min(a.exponent(v), b.exponent(v)));
  return m;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(int nvars) : nvars_(nvars) {
  if (nvars < 0 || nvars > kMaxVariables) throw std::invalid_argument("unsupported variable count");
}

Polynomial::Polynomial(int nvars, const Rational& constant) : Polynomial(nvars) {
  if (constant != 0) terms_.push_back({Monomial{}, constant});
}

Polynomial::Polynomial(int nvars, std::vector<Term> terms) : Polynomial(nvars) {
  terms_ = std::move(terms);
  normalize();
}

Polynomial Polynomial::variable(int nvars, int var) {
  if (var < 0 || var >= nvars) throw std::out_of_range("variable index out of range");
  Polynomial p(nvars);
  p.terms_.push_back({Monomial::variable(var), Rational(1)});
  return p;
}

void Polynomial::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.monomial > b.monomial; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().monomial == t.monomial) {
      out.back().coefficient += t.coefficient;
    } else {
      if (!out.empty() && out.back().coefficient == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coefficient == 0) out.pop_back();
  terms_ = std::move(out);
}

bool Polynomial::is_one() const {
  return terms_.size() == 1 && terms_[0].monomial.is_one() && terms_[0].coefficient == 1;
}

Rational Polynomial::constant_value() const {
  assert(is_constant());
  return terms_.empty() ? Rational(0) : terms_[0].coefficient;
}

int Polynomial::total_degree() const {
  return terms_.empty() ? -1 : terms_.front().monomial.degree();
}

int Polynomial::degree_in(int var) const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.exponent(var));
  return d;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coefficient = -t.coefficient;
  return r;
}

namespace {

template <typename Combine>
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, Combine sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].monomial > b[j].monomial)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].monomial > a[i].monomial) {
      out.push_back({b[j].monomial, sign(b[j].coefficient)});
      ++j;
    } else {
      Rational c = a[i].coefficient + sign(b[j].coefficient);
      if (c != 0) out.push_back({a[i].monomial, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  assert(nvars_ == other.nvars_);
  if (other.is_zero()) return *this;
  terms_ = merge_terms(terms_, other.terms_, [](const Rational& c) { return c; });
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  assert(nvars_ == other.nvars_);
  if (other.is_zero()) return *this;
  terms_ = merge_terms(terms_, other.terms_, [](const Rational& c) { return Rational(-c); });
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) { return *this = *this * other; }

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coefficient *= scalar;
  }
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  assert(a.nvars_ == b.nvars_);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.nvars_);
  if (b.is_constant()) return a * b.terms_[0].coefficient;
  if (a.is_constant()) return b * a.terms_[0].coefficient;
  std::vector<Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) prod.push_back({s.monomial * t.monomial, s.coefficient * t.coefficient});
  return Polynomial(a.nvars_, std::move(prod));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].monomial == b.terms_[i].monomial) || a.terms_[i].coefficient != b.terms_[i].coefficient)
      return false;
  }
  return true;
}

Polynomial Polynomial::multiply_monomial(const Monomial& m, const Rational& c) const {
  Polynomial r(nvars_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.monomial * m, t.coefficient * c});
  return r;  // order preserved: grlex is a monomial order
}

Polynomial Polynomial::derivative(int var) const {
  if (var < 0 || var >= nvars_) throw std::out_of_range("coordinate index out of range");
  std::vector<Term> out;
  for (const auto& t : terms_) {
    const int e = t.monomial.exponent(var);
    if (e == 0) continue;
    out.push_back({t.monomial.with_exponent(var, e - 1), t.coefficient * e});
  }
  return Polynomial(nvars_, std::move(out));
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (static_cast<int>(point.size()) != nvars_) throw std::invalid_argument("point dimension mismatch");
  Rational sum = 0;
  for (const auto& t : terms_) {
    Rational v = t.coefficient;
    for (int k = 0; k < nvars_; ++k) {
      const int e = t.monomial.exponent(k);
      if (e == 0) continue;
      mpq_class pw;
      mpz_pow_ui(pw.get_num_mpz_t(), point[k].get_num_mpz_t(), e);
      mpz_pow_ui(pw.get_den_mpz_t(), point[k].get_den_mpz_t(), e);
      pw.canonicalize();
      v *= pw;
    }
    sum += v;
  }
  return sum;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result(nvars_, Rational(1));
  Polynomial base = *this;
  while (exponent) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent) base *= base;
  }
  return result;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  if (is_zero()) return Polynomial(nvars_);
  if (divisor.is_constant()) return *this * Rational(1 / divisor.terms_[0].coefficient);
  const Term& lead = divisor.terms_.front();
  if (total_degree() < divisor.total_degree()) return std::nullopt;
  // Leading and trailing monomials of a product are the products of those of
  // the factors, and degrees in each variable add.
  if (!lead.monomial.divides(terms_.front().monomial)) return std::nullopt;
  if (!divisor.terms_.back().monomial.divides(terms_.back().monomial)) return std::nullopt;
  for (int v = 0; v < nvars_; ++v)
    if (degree_in(v) < divisor.degree_in(v)) return std::nullopt;

  std::map<Monomial, Rational, std::greater<>> rem;
  for (const auto& t : terms_) rem.emplace_hint(rem.end(), t.monomial, t.coefficient);
  std::vector<Term> quotient;
  while (!rem.empty()) {
    const auto top = rem.begin();
    if (!lead.monomial.divides(top->first)) return std::nullopt;
    Term q{top->first / lead.monomial, top->second / lead.coefficient};
    rem.erase(top);
    for (std::size_t i = 1; i < divisor.terms_.size(); ++i) {
      const Term& t = divisor.terms_[i];
      auto [it, inserted] = rem.try_emplace(t.monomial * q.monomial);
      it->second -= t.coefficient * q.coefficient;
      if (it->second == 0) rem.erase(it);
    }
    quotient.push_back(std::move(q));
  }
  return Polynomial(nvars_, std::move(quotient));
}

Polynomial Polynomial::monic() const {
  if (is_zero() || leading_coefficient() == 1) return *this;
  return *this * Rational(1 / leading_coefficient());
}

std::string Polynomial::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coefficient;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const bool unit = (c == 1);
    if (!unit || t.monomial.is_one()) os << c.get_str();
    bool need_star = !unit;
    for (int v = 0; v < nvars_; ++v) {
      const int e = t.monomial.exponent(v);
      if (e == 0) continue;
      if (need_star) os << "*";
      os << (v < static_cast<int>(names.size()) ? names[v] : "x" + std::to_string(v + 1));
      if (e > 1) os << "^" << e;
      need_star = true;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// gcd: recursive primitive polynomial remainder sequences over Q[rest][v]

namespace {

std::vector<Polynomial> coefficients_in(const Polynomial& p, int var) {
  std::vector<std::vector<Term>> buckets(p.degree_in(var) + 1);
  for (const auto& t : p.terms()) {
    const int e = t.monomial.exponent(var);
    buckets[e].push_back({t.monomial.with_exponent(var, 0), t.coefficient});
  }
  std::vector<Polynomial> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.emplace_back(p.nvars(), std::move(b));
  return out;
}

Polynomial leading_coefficient_in(const Polynomial& p, int var) {
  const int d = p.degree_in(var);
  std::vector<Term> out;
  for (const auto& t : p.terms())
    if (t.monomial.exponent(var) == d) out.push_back({t.monomial.with_exponent(var, 0), t.coefficient});
  return Polynomial(p.nvars(), std::move(out));
}

Polynomial content_in(const Polynomial& p, int var) {
  Polynomial g(p.nvars());
  for (const auto& c : coefficients_in(p, var)) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, int var) {
  const int n = b.degree_in(var);
  const Polynomial lb = leading_coefficient_in(b, var);
  Polynomial r = a;
  while (!r.is_zero() && r.degree_in(var) >= n) {
    const int d = r.degree_in(var) - n;
    const Polynomial lr = leading_coefficient_in(r, var);
    // When lb divides lr the step needs no scaling of r; this keeps degrees
    // in the other variables from growing on dense inputs.
    if (auto q = lr.divide_exact(lb)) {
      r -= *q * b.multiply_monomial(Monomial::variable(var, d), Rational(1));
      continue;
    }
    r = r * lb - lr * b.multiply_monomial(Monomial::variable(var, d), Rational(1));
  }
  return r;
}

Polynomial exact_quotient(const Polynomial& a, const Polynomial& b) {
  auto q = a.divide_exact(b);
  if (!q) throw std::logic_error("gcd: expected exact division");
  return *q;
}

Polynomial monomial_gcd(const Monomial& m, const Polynomial& p) {
  Monomial g = m;
  for (const auto& t : p.terms()) g = gcd(g, t.monomial);
  return Polynomial(p.nvars(), {Term{g, Rational(1)}});
}

// Heuristic gcd over Z: evaluate one variable at a large integer xi, recurse,
// and rebuild the candidate from its xi-adic digits. A candidate whose
// primitive part divides both inputs is the gcd; otherwise the caller falls
// back to the remainder sequence.

mpz_class integer_content(const Polynomial& p) {
  mpz_class g = 0;
  for (const auto& t : p.terms()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coefficient.get_num_mpz_t());
    if (g == 1) break;
  }
  return g;
}

// Clears denominators and the integer content.
Polynomial primitive_integer(const Polynomial& p) {
  mpz_class l = 1;
  for (const auto& t : p.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coefficient.get_den_mpz_t());
  Polynomial q = p * Rational(l);
  const mpz_class c = integer_content(q);
  if (c > 1) q *= Rational(1, 1) / Rational(c);
  return q;
}

mpz_class max_norm(const Polynomial& p) {
  mpz_class m = 0;
  for (const auto& t : p.terms()) {
    const mpz_class a = abs(t.coefficient.get_num());
    if (a > m) m = a;
  }
  return m;
}

Polynomial substitute(const Polynomial& p, int var, const mpz_class& xi) {
  std::vector<Term> out;
  out.reserve(p.terms().size());
  mpz_class power;
  for (const auto& t : p.terms()) {
    mpz_pow_ui(power.get_mpz_t(), xi.get_mpz_t(), static_cast<unsigned long>(t.monomial.exponent(var)));
    out.push_back({t.monomial.with_exponent(var, 0), t.coefficient * Rational(power)});
  }
  return Polynomial(p.nvars(), std::move(out));
}

// Coefficient bit budget; past it the evaluation tower is not worth pursuing.
constexpr std::size_t kHeuristicBitLimit = 60000;

std::optional<Polynomial> heuristic_gcd(Polynomial a, Polynomial b) {
  const int n = a.nvars();
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const mpz_class ca = integer_content(a), cb = integer_content(b);
  mpz_class c;
  mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  if (a.is_constant() || b.is_constant()) return Polynomial(n, Rational(c));
  a *= Rational(1) / Rational(ca);
  b *= Rational(1) / Rational(cb);

  int var = -1;
  for (int v = n - 1; v >= 0 && var < 0; --v)
    if (a.depends_on(v) || b.depends_on(v)) var = v;

  mpz_class xi = 2 * std::min(max_norm(a), max_norm(b)) + 29;
  const int top = std::max(a.degree_in(var), b.degree_in(var));
  for (int attempt = 0; attempt < 6; ++attempt) {
    if (mpz_sizeinbase(xi.get_mpz_t(), 2) * static_cast<std::size_t>(top + 1) > kHeuristicBitLimit) return std::nullopt;
    const auto gamma = heuristic_gcd(substitute(a, var, xi), substitute(b, var, xi));
    if (gamma) {
      Polynomial rest = *gamma;
      Polynomial candidate(n);
      const mpz_class half = xi / 2;
      for (int i = 0; !rest.is_zero(); ++i) {
        std::vector<Term> digit;
        for (const auto& t : rest.terms()) {
          mpz_class r;
          mpz_fdiv_r(r.get_mpz_t(), t.coefficient.get_num_mpz_t(), xi.get_mpz_t());
          if (r > half) r -= xi;
          if (r != 0) digit.push_back({t.monomial, Rational(r)});
        }
        Polynomial g(n, std::move(digit));
        if (i > 255) return std::nullopt;
        candidate += g.multiply_monomial(Monomial::variable(var, i), Rational(1));
        rest -= g;
        rest *= Rational(1) / Rational(xi);
      }
      if (!candidate.is_zero()) {
        candidate *= Rational(1) / Rational(integer_content(candidate));
        if (candidate.leading_coefficient() < 0) candidate = -candidate;
        if (a.divide_exact(candidate) && b.divide_exact(candidate)) return candidate * Rational(c);
      }
    }
    xi = xi * 73794 / 27011;
  }
  return std::nullopt;
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  const int n = a.nvars();
  if (a.is_constant() || b.is_constant()) return Polynomial(n, Rational(1));
  if (a.terms().size() == 1) return monomial_gcd(a.leading_term().monomial, b);
  if (b.terms().size() == 1) return monomial_gcd(b.leading_term().monomial, a);
  if (a == b) return a.monic();
  if (a.total_degree() >= b.total_degree()) {
    if (a.divide_exact(b)) return b.monic();
  } else if (b.divide_exact(a)) {
    return a.monic();
  }
  if (auto g = heuristic_gcd(primitive_integer(a), primitive_integer(b))) return g->monic();

  int var = -1;
  int best = 1 << 30;
  for (int v = 0; v < n; ++v) {
    const int da = a.degree_in(v), db = b.degree_in(v);
    if (da > 0 && db == 0) return gcd(content_in(a, v), b);
    if (db > 0 && da == 0) return gcd(a, content_in(b, v));
    if (da > 0 && std::max(da, db) < best) {
      best = std::max(da, db);
      var = v;
    }
  }
  assert(var >= 0);

  const Polynomial ca = content_in(a, var);
  const Polynomial cb = content_in(b, var);
  const Polynomial c = gcd(ca, cb);
  Polynomial p = exact_quotient(a, ca);
  Polynomial q = exact_quotient(b, cb);
  if (p.degree_in(var) < q.degree_in(var)) std::swap(p, q);
  while (true) {
    Polynomial r = pseudo_remainder(p, q, var);
    if (r.is_zero()) break;
    if (r.degree_in(var) == 0) return c.monic();
    p = std::move(q);
    q = exact_quotient(r, content_in(r, var)).monic();
  }
  const Polynomial g = exact_quotient(q, content_in(q, var));
  return (c * g).monic();
}

}  // namespace gradsym
