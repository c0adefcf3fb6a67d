#include "gradsym/derivation.hpp"

#include "gradsym/errors.hpp"

namespace gradsym {

namespace {

bool odd(int k) { return (k & 1) != 0; }

Form apply_part(int degree, const DerivationPart& p, const Form& a) {
  Form out(a.dim());
  if (!p.lie.is_zero()) {
    // L_K = [i_K, d] = i_K d + (-1)^k d i_K
    out += insert_vvform(p.lie, exterior_derivative(a));
    const Form di = exterior_derivative(insert_vvform(p.lie, a));
    if (odd(degree)) out -= di; else out += di;
  }
  if (!p.algebraic.is_zero()) out += insert_vvform(p.algebraic, a);
  return out;
}

}  // namespace

Derivation Derivation::from_parts(const VectorValuedForm& lie, const VectorValuedForm& algebraic) {
  const int dim = lie.dim() ? lie.dim() : algebraic.dim();
  Derivation d(dim);
  int degree;
  if (!lie.is_zero()) {
    degree = lie.degree();
    if (!algebraic.is_zero() && algebraic.degree() != degree + 1)
      throw UsageError("FN pair degrees are inconsistent");
  } else {
    degree = algebraic.degree() - 1;
  }
  DerivationPart p{lie.is_zero() ? VectorValuedForm(dim, degree) : lie,
                   algebraic.is_zero() ? VectorValuedForm(dim, degree + 1) : algebraic};
  d.add_part(degree, p);
  return d;
}

Derivation Derivation::lie(const VectorField& x) {
  return from_parts(VectorValuedForm::from_vector_field(x), VectorValuedForm(x.dim(), 1));
}

Derivation Derivation::lie(const VectorValuedForm& k) {
  return from_parts(k, VectorValuedForm(k.dim(), k.degree() + 1));
}

Derivation Derivation::insertion(const VectorField& x) {
  return from_parts(VectorValuedForm(x.dim(), -1), VectorValuedForm::from_vector_field(x));
}

Derivation Derivation::insertion(const VectorValuedForm& k) {
  return from_parts(VectorValuedForm(k.dim(), k.degree() - 1), k);
}

Derivation Derivation::exterior(int dim) { return lie(VectorValuedForm::identity(dim)); }

Derivation Derivation::from_action(int dim, const std::function<Form(const Form&)>& op) {
  // K^a = D(x^a); i_{L'}(dx^a) = D(dx^a) - L_K(dx^a) = D(dx^a) - (-1)^k dK^a.
  std::map<int, std::vector<Form>> lie, alg;
  auto slot = [dim](std::map<int, std::vector<Form>>& m, int k) -> std::vector<Form>& {
    auto it = m.find(k);
    if (it == m.end()) it = m.emplace(k, std::vector<Form>(dim, Form(dim))).first;
    return it->second;
  };
  for (int a = 0; a < dim; ++a) {
    const Form on_function = op(Form::coordinate(dim, a));
    for (int p : on_function.degrees()) slot(lie, p)[a] += on_function.part(p);
    const Form on_differential = op(Form::dx(dim, a));
    for (int q : on_differential.degrees()) slot(alg, q - 1)[a] += on_differential.part(q);
  }
  for (auto& [k, comps] : lie) {
    auto& target = slot(alg, k);
    for (int a = 0; a < dim; ++a) {
      if (comps[a].is_zero()) continue;
      const Form dk = exterior_derivative(comps[a]);
      if (odd(k)) target[a] += dk; else target[a] -= dk;
    }
  }
  Derivation d(dim);
  for (auto& [k, comps] : alg) {
    DerivationPart p{VectorValuedForm(dim, k), VectorValuedForm(k + 1, comps)};
    if (auto it = lie.find(k); it != lie.end()) p.lie = VectorValuedForm(k, it->second);
    d.add_part(k, p);
  }
  for (auto& [k, comps] : lie) {
    if (alg.count(k)) continue;
    d.add_part(k, DerivationPart{VectorValuedForm(k, comps), VectorValuedForm(dim, k + 1)});
  }
  return d;
}

std::vector<int> Derivation::degrees() const {
  std::vector<int> out;
  for (const auto& [k, p] : parts_) out.push_back(k);
  return out;
}

Derivation Derivation::part(int degree) const {
  Derivation d(dim_);
  if (auto it = parts_.find(degree); it != parts_.end()) d.parts_.emplace(degree, it->second);
  return d;
}

Derivation Derivation::truncated(int max_degree) const {
  Derivation d(dim_);
  for (const auto& [k, p] : parts_)
    if (k <= max_degree) d.parts_.emplace(k, p);
  return d;
}

void Derivation::add_part(int degree, const DerivationPart& p) {
  auto it = parts_.find(degree);
  if (it == parts_.end()) {
    parts_.emplace(degree, p);
  } else {
    it->second.lie += p.lie;
    it->second.algebraic += p.algebraic;
  }
  prune();
}

void Derivation::prune() {
  for (auto it = parts_.begin(); it != parts_.end();) {
    if (it->second.lie.is_zero() && it->second.algebraic.is_zero()) {
      it = parts_.erase(it);
    } else {
      ++it;
    }
  }
}

Form Derivation::apply(const Form& a) const {
  if (a.dim() != dim_) throw UsageError("derivation and form live on different charts");
  Form out(dim_);
  for (const auto& [k, p] : parts_) out += apply_part(k, p, a);
  return out;
}

Form apply_derivation(const Derivation& d, const Form& a) { return d.apply(a); }

Derivation Derivation::operator-() const {
  Derivation d(dim_);
  for (const auto& [k, p] : parts_) d.parts_.emplace(k, DerivationPart{-p.lie, -p.algebraic});
  return d;
}

Derivation& Derivation::operator+=(const Derivation& o) {
  if (o.dim_ != dim_) throw UsageError("derivations live on different charts");
  for (const auto& [k, p] : o.parts_) add_part(k, p);
  return *this;
}

Derivation& Derivation::operator-=(const Derivation& o) { return *this += -o; }

bool operator==(const Derivation& a, const Derivation& b) {
  if (a.dim_ != b.dim_ || a.parts_.size() != b.parts_.size()) return false;
  for (const auto& [k, p] : a.parts_) {
    auto it = b.parts_.find(k);
    if (it == b.parts_.end()) return false;
    if (!(p.lie == it->second.lie) || !(p.algebraic == it->second.algebraic)) return false;
  }
  return true;
}

Derivation Derivation::left_multiplied(const Form& beta) const {
  if (beta.is_zero()) return Derivation(dim_);
  const Derivation self = *this;
  return from_action(dim_, [&](const Form& a) { return wedge(beta, self.apply(a)); });
}

std::string Derivation::to_string(std::span<const std::string> names) const {
  if (parts_.empty()) return "0";
  std::string s;
  for (const auto& [k, p] : parts_) {
    if (!s.empty()) s += " + ";
    s += "[deg " + std::to_string(k) + ": L_{" + p.lie.to_string(names) + "} + i_{" +
         p.algebraic.to_string(names) + "}]";
  }
  return s;
}

Derivation commutator(const Derivation& d, const Derivation& e) {
  if (d.dim() != e.dim()) throw UsageError("derivations live on different charts");
  Derivation out(d.dim());
  for (int p : d.degrees()) {
    const Derivation dp = d.part(p);
    for (int q : e.degrees()) {
      const Derivation eq = e.part(q);
      const bool sign_flip = odd(p) && odd(q);
      out += Derivation::from_action(d.dim(), [&](const Form& a) {
        const Form de = dp.apply(eq.apply(a));
        const Form ed = eq.apply(dp.apply(a));
        return sign_flip ? de + ed : de - ed;
      });
    }
  }
  return out;
}

}  // namespace gradsym
