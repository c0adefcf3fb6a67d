#include "gradsym/corpus.hpp"

#include <algorithm>
#include <bit>

namespace gradsym {

namespace {

Form random_form(CorpusRng& rng, int n, int degree, const CorpusOptions& options) {
  // One or two wedge monomials, each with a random polynomial coefficient.
  std::vector<WedgeMask> masks;
  for (WedgeMask m = 0; m < (WedgeMask{1} << n); ++m)
    if (std::popcount(m) == degree) masks.push_back(m);
  Form out(n);
  while (out.is_zero()) {
    const int count = rng.uniform(1, std::min<int>(2, static_cast<int>(masks.size())));
    for (int t = 0; t < count; ++t) {
      const WedgeMask m = masks[rng.uniform(0, static_cast<int>(masks.size()) - 1)];
      out += Form::monomial(n, m, random_polynomial(rng, n, options));
    }
  }
  return out;
}

// A single antisymmetrized component with a constant or linear coefficient.
LTensor random_l_tensor(CorpusRng& rng, int n, const CorpusOptions& options) {
  LTensor l(n, std::vector<std::vector<Scalar>>(n, std::vector<Scalar>(n, Scalar(n))));
  const int i = rng.uniform(0, n - 1);
  const int j = rng.uniform(0, n - 1);
  int k = rng.uniform(0, n - 2);
  if (k >= j) ++k;
  int c = 0;
  while (c == 0) c = rng.uniform(-options.coefficient_bound, options.coefficient_bound);
  Scalar v(n, Rational(c));
  if (rng.uniform(0, 1)) v = v * Scalar::variable(n, rng.uniform(0, n - 1));
  l[i][j][k] = v;
  l[i][k][j] = -v;
  return l;
}

bool is_zero_l(const LTensor& l) {
  for (const auto& a : l)
    for (const auto& b : a)
      for (const auto& c : b)
        if (!c.is_zero()) return false;
  return true;
}

}  // namespace

int CorpusRng::uniform(int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % span);
  std::uint64_t v;
  do v = engine_(); while (v >= limit);
  return lo + static_cast<int>(v % span);
}

Scalar random_polynomial(CorpusRng& rng, int nvars, const CorpusOptions& options) {
  while (true) {
    std::vector<Term> terms;
    const int count = rng.uniform(1, options.max_terms);
    for (int t = 0; t < count; ++t) {
      Monomial m;
      const int degree = rng.uniform(0, options.max_poly_degree);
      for (int s = 0; s < degree; ++s) m = m * Monomial::variable(rng.uniform(0, nvars - 1));
      int c = 0;
      while (c == 0) c = rng.uniform(-options.coefficient_bound, options.coefficient_bound);
      terms.push_back({m, Rational(c)});
    }
    Polynomial p(nvars, std::move(terms));
    if (!p.is_constant()) return Scalar(std::move(p));
  }
}

Corpus make_corpus(const ChartGeometry& chart, const CorpusOptions& options) {
  const int n = chart.dim();
  CorpusRng rng(options.seed);
  Corpus c;
  for (int s = 0; s < options.samples; ++s) c.functions.push_back(random_polynomial(rng, n, options));
  for (int s = 0; s < options.samples; ++s) c.one_forms.push_back(random_form(rng, n, 1, options));
  for (int p = 2; p <= std::min(options.max_form_degree, n); ++p)
    for (int s = 0; s < options.samples; ++s) c.higher_forms.push_back(random_form(rng, n, p, options));
  while (static_cast<int>(c.l_tensors.size()) < options.l_samples) {
    LTensor l = random_l_tensor(rng, n, options);
    if (!is_zero_l(l)) c.l_tensors.push_back(std::move(l));
  }
  return c;
}

std::vector<Form> Corpus::all_forms(int dim) const {
  std::vector<Form> out;
  for (const auto& f : functions) out.emplace_back(dim, f);
  out.insert(out.end(), one_forms.begin(), one_forms.end());
  out.insert(out.end(), higher_forms.begin(), higher_forms.end());
  return out;
}

std::vector<std::string> Corpus::describe(const ChartGeometry& chart) const {
  const auto& names = chart.coordinates();
  std::vector<std::string> out;
  for (const auto& f : functions) out.push_back(f.to_string(names));
  for (const auto& a : one_forms) out.push_back(a.to_string(names));
  for (const auto& a : higher_forms) out.push_back(a.to_string(names));
  return out;
}

}  // namespace gradsym
