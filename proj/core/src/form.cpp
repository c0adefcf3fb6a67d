#include "gradsym/form.hpp"

#include <sstream>

#include "gradsym/errors.hpp"

namespace gradsym {

int wedge_sign(WedgeMask a, WedgeMask b) {
  if (a & b) return 0;
  int inversions = 0;
  for (WedgeMask rest = b; rest; rest &= rest - 1) {
    const int j = std::countr_zero(rest);
    const WedgeMask above = (j >= 31) ? 0u : (a & ~((WedgeMask{2} << j) - 1));
    inversions += std::popcount(above);
  }
  return (inversions & 1) ? -1 : 1;
}

namespace {

void check_same_chart(const Form& a, const Form& b) {
  if (a.dim() != b.dim()) throw UsageError("forms live on charts of different dimension");
}

std::string wedge_name(WedgeMask mask, std::span<const std::string> names) {
  std::string s;
  for (WedgeMask rest = mask; rest; rest &= rest - 1) {
    const int i = std::countr_zero(rest);
    if (!s.empty()) s += "^";
    s += "d" + (i < static_cast<int>(names.size()) ? names[i] : "x" + std::to_string(i + 1));
  }
  return s;
}

}  // namespace

// ---------------------------------------------------------------------------
// Form

Form::Form(int dim, const Scalar& function) : dim_(dim) { add_term(0, function); }

Form Form::dx(int dim, int var) {
  if (var < 0 || var >= dim) throw UsageError("coordinate index out of range");
  return monomial(dim, WedgeMask{1} << var, Scalar(dim, Rational(1)));
}

Form Form::monomial(int dim, WedgeMask mask, const Scalar& coefficient) {
  Form f(dim);
  f.add_term(mask, coefficient);
  return f;
}

void Form::add_term(WedgeMask mask, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(mask);
  if (it == terms_.end()) {
    terms_.emplace(mask, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Scalar Form::coefficient(WedgeMask mask) const {
  auto it = terms_.find(mask);
  return it == terms_.end() ? Scalar(dim_) : it->second;
}

std::vector<int> Form::degrees() const {
  std::vector<int> out;
  for (const auto& [mask, c] : terms_) {
    const int d = mask_degree(mask);
    if (out.empty() || out.back() != d) out.push_back(d);
  }
  return out;
}

int Form::degree(int fallback) const {
  const auto ds = degrees();
  if (ds.empty()) return fallback;
  if (ds.size() > 1) throw UsageError("form is not homogeneous");
  return ds.front();
}

Form Form::part(int degree) const {
  Form f(dim_);
  for (const auto& [mask, c] : terms_)
    if (mask_degree(mask) == degree) f.terms_.emplace(mask, c);
  return f;
}

Form Form::part_up_to(int max_degree) const {
  Form f(dim_);
  for (const auto& [mask, c] : terms_)
    if (mask_degree(mask) <= max_degree) f.terms_.emplace(mask, c);
  return f;
}

Form Form::operator-() const {
  Form f(dim_);
  for (const auto& [mask, c] : terms_) f.terms_.emplace(mask, -c);
  return f;
}

Form& Form::operator+=(const Form& o) {
  check_same_chart(*this, o);
  for (const auto& [mask, c] : o.terms_) add_term(mask, c);
  return *this;
}

Form& Form::operator-=(const Form& o) {
  check_same_chart(*this, o);
  for (const auto& [mask, c] : o.terms_) add_term(mask, -c);
  return *this;
}

Form& Form::operator*=(const Scalar& f) {
  if (f.is_zero()) {
    terms_.clear();
    return *this;
  }
  if (f.is_one()) return *this;
  for (auto& [mask, c] : terms_) c *= f;
  return *this;
}

Form& Form::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [mask, c] : terms_) c *= s;
  return *this;
}

std::string Form::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mask, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    const std::string cs = c.to_string(names);
    if (mask == 0) {
      os << cs;
      continue;
    }
    if (c.is_one()) {
      os << wedge_name(mask, names);
    } else {
      const bool simple = c.is_polynomial() && c.numerator().terms().size() == 1;
      os << (simple ? cs : "(" + cs + ")") << "*" << wedge_name(mask, names);
    }
  }
  return os.str();
}

Form wedge(const Form& a, const Form& b) {
  check_same_chart(a, b);
  Form out(a.dim());
  if (a.is_zero() || b.is_zero()) return out;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      const int s = wedge_sign(ma, mb);
      if (s == 0) continue;
      Scalar c = ca * cb;
      if (s < 0) c = -c;
      out += Form::monomial(a.dim(), ma | mb, c);
    }
  }
  return out;
}

Form exterior_derivative(const Form& a) {
  Form out(a.dim());
  for (const auto& [mask, c] : a.terms()) {
    for (int v = 0; v < a.dim(); ++v) {
      const WedgeMask bit = WedgeMask{1} << v;
      if (mask & bit) continue;
      Scalar dc = c.partial(v);
      if (dc.is_zero()) continue;
      if (wedge_sign(bit, mask) < 0) dc = -dc;
      out += Form::monomial(a.dim(), mask | bit, dc);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// VectorField

VectorField VectorField::coordinate(int dim, int var) {
  if (var < 0 || var >= dim) throw UsageError("coordinate index out of range");
  VectorField x(dim);
  x[var] = Scalar(dim, Rational(1));
  return x;
}

bool VectorField::is_zero() const {
  for (const auto& c : components_)
    if (!c.is_zero()) return false;
  return true;
}

VectorField VectorField::operator-() const {
  VectorField r = *this;
  for (auto& c : r.components_) c = -c;
  return r;
}

VectorField& VectorField::operator+=(const VectorField& o) {
  if (dim() != o.dim()) throw UsageError("vector field dimension mismatch");
  for (int a = 0; a < dim(); ++a) components_[a] += o.components_[a];
  return *this;
}

VectorField& VectorField::operator-=(const VectorField& o) {
  if (dim() != o.dim()) throw UsageError("vector field dimension mismatch");
  for (int a = 0; a < dim(); ++a) components_[a] -= o.components_[a];
  return *this;
}

VectorField operator*(const Scalar& f, VectorField v) {
  for (auto& c : v.components_) c *= f;
  return v;
}

Scalar VectorField::apply(const Scalar& f) const {
  Scalar out(dim());
  for (int a = 0; a < dim(); ++a)
    if (!components_[a].is_zero()) out += components_[a] * f.partial(a);
  return out;
}

std::string VectorField::to_string(std::span<const std::string> names) const {
  std::string s;
  for (int a = 0; a < dim(); ++a) {
    if (components_[a].is_zero()) continue;
    if (!s.empty()) s += " + ";
    const std::string nm = a < static_cast<int>(names.size()) ? names[a] : "x" + std::to_string(a + 1);
    s += "(" + components_[a].to_string(names) + ")*d_" + nm;
  }
  return s.empty() ? "0" : s;
}

VectorField lie_bracket(const VectorField& x, const VectorField& y) {
  VectorField out(x.dim());
  for (int a = 0; a < x.dim(); ++a) out[a] = x.apply(y[a]) - y.apply(x[a]);
  return out;
}

Form insert_vector(const VectorField& x, const Form& a) {
  Form out(a.dim());
  for (const auto& [mask, c] : a.terms()) {
    int position = 0;
    for (WedgeMask rest = mask; rest; rest &= rest - 1, ++position) {
      const int i = std::countr_zero(rest);
      if (x[i].is_zero()) continue;
      Scalar term = x[i] * c;
      if (position & 1) term = -term;
      out += Form::monomial(a.dim(), mask & ~(WedgeMask{1} << i), term);
    }
  }
  return out;
}

Form lie_derivative(const VectorField& x, const Form& a) {
  return insert_vector(x, exterior_derivative(a)) + exterior_derivative(insert_vector(x, a));
}

Form contract(const Form& a, std::span<const VectorField> vectors) {
  Form out = a;
  for (const auto& v : vectors) out = insert_vector(v, out);
  return out;
}

// ---------------------------------------------------------------------------
// VectorValuedForm

VectorValuedForm::VectorValuedForm(int degree, std::vector<Form> components)
    : degree_(degree), components_(std::move(components)) {
  for (const auto& c : components_) {
    if (c.dim() != dim()) throw UsageError("vector-valued form component has wrong chart dimension");
    const auto ds = c.degrees();
    if (!ds.empty() && (ds.size() > 1 || ds.front() != degree))
      throw UsageError("vector-valued form components must be homogeneous of the declared degree");
  }
}

VectorValuedForm VectorValuedForm::from_vector_field(const VectorField& x) {
  std::vector<Form> comps;
  for (const auto& c : x.components()) comps.emplace_back(x.dim(), c);
  return VectorValuedForm(0, std::move(comps));
}

VectorValuedForm VectorValuedForm::identity(int dim) {
  std::vector<Form> comps;
  for (int a = 0; a < dim; ++a) comps.push_back(Form::dx(dim, a));
  return VectorValuedForm(1, std::move(comps));
}

void VectorValuedForm::set(int a, Form f) {
  const auto ds = f.degrees();
  if (!ds.empty() && (ds.size() > 1 || ds.front() != degree_))
    throw UsageError("component degree mismatch");
  components_.at(a) = std::move(f);
}

bool VectorValuedForm::is_zero() const {
  for (const auto& c : components_)
    if (!c.is_zero()) return false;
  return true;
}

VectorField VectorValuedForm::as_vector_field() const {
  if (degree_ != 0 && !is_zero()) throw UsageError("not a vector field");
  std::vector<Scalar> comps;
  for (const auto& c : components_) comps.push_back(c.function_part());
  return VectorField(std::move(comps));
}

VectorValuedForm VectorValuedForm::operator-() const {
  VectorValuedForm r = *this;
  for (auto& c : r.components_) c = -c;
  return r;
}

VectorValuedForm& VectorValuedForm::operator+=(const VectorValuedForm& o) {
  if (dim() != o.dim()) throw UsageError("vector-valued form dimension mismatch");
  if (degree_ != o.degree_ && !o.is_zero()) {
    if (!is_zero()) throw UsageError("adding vector-valued forms of different degrees");
    degree_ = o.degree_;
  }
  for (int a = 0; a < dim(); ++a) components_[a] += o.components_[a];
  return *this;
}

VectorValuedForm& VectorValuedForm::operator-=(const VectorValuedForm& o) { return *this += -o; }

VectorValuedForm operator*(const Rational& c, VectorValuedForm k) {
  for (auto& f : k.components_) f *= c;
  return k;
}

bool operator==(const VectorValuedForm& a, const VectorValuedForm& b) {
  if (a.dim() != b.dim()) return false;
  if (a.is_zero() && b.is_zero()) return true;
  return a.degree_ == b.degree_ && a.components_ == b.components_;
}

VectorValuedForm wedge(const Form& beta, const VectorValuedForm& k) {
  std::vector<Form> comps;
  for (const auto& c : k.components()) comps.push_back(wedge(beta, c));
  return VectorValuedForm(beta.degree() + k.degree(), std::move(comps));
}

VectorValuedForm VectorValuedForm::transformed(const std::vector<std::vector<Scalar>>& m) const {
  VectorValuedForm out(dim(), degree_);
  for (int a = 0; a < dim(); ++a) {
    Form acc(dim());
    for (int b = 0; b < dim(); ++b)
      if (!m[a][b].is_zero() && !components_[b].is_zero()) acc += components_[b] * m[a][b];
    out.components_[a] = std::move(acc);
  }
  return out;
}

VectorField VectorValuedForm::evaluate(std::span<const VectorField> vectors) const {
  std::vector<Scalar> comps;
  for (const auto& c : components_) comps.push_back(contract(c, vectors).function_part());
  return VectorField(std::move(comps));
}

std::string VectorValuedForm::to_string(std::span<const std::string> names) const {
  std::string s;
  for (int a = 0; a < dim(); ++a) {
    if (components_[a].is_zero()) continue;
    if (!s.empty()) s += " + ";
    const std::string nm = a < static_cast<int>(names.size()) ? names[a] : "x" + std::to_string(a + 1);
    s += "(" + components_[a].to_string(names) + ")(x)d_" + nm;
  }
  return s.empty() ? "0" : s;
}

Form insert_vvform(const VectorValuedForm& k, const Form& a) {
  if (k.dim() != a.dim()) throw UsageError("chart mismatch in insert_vvform");
  Form out(a.dim());
  if (k.is_zero()) return out;
  const bool odd_shift = ((k.degree() - 1) & 1) != 0;
  for (const auto& [mask, c] : a.terms()) {
    int position = 0;
    for (WedgeMask rest = mask; rest; rest &= rest - 1, ++position) {
      const int i = std::countr_zero(rest);
      const Form& ki = k[i];
      if (ki.is_zero()) continue;
      const WedgeMask bit = WedgeMask{1} << i;
      const WedgeMask prefix = mask & (bit - 1);
      const WedgeMask suffix = mask & ~(bit | (bit - 1));
      const int base = (odd_shift && (position & 1)) ? -1 : 1;
      for (const auto& [km, kc] : ki.terms()) {
        const int s1 = wedge_sign(prefix, km);
        if (s1 == 0) continue;
        const int s2 = wedge_sign(prefix | km, suffix);
        if (s2 == 0) continue;
        Scalar term = kc * c;
        if (base * s1 * s2 < 0) term = -term;
        out += Form::monomial(a.dim(), prefix | km | suffix, term);
      }
    }
  }
  return out;
}

}  // namespace gradsym
