#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gradsym/geometry.hpp"

namespace gradsym {

struct CorpusOptions {
  std::uint64_t seed = 42;
  int samples = 8;           // functions, one-forms and forms of each higher degree
  int max_form_degree = 1;   // forms of degree 2..max_form_degree join the corpus
  int max_poly_degree = 4;
  int max_terms = 4;
  int coefficient_bound = 3;
  int l_samples = 3;
};

/// Seeded random test data for one chart.
struct Corpus {
  std::vector<Scalar> functions;
  std::vector<Form> one_forms;
  std::vector<Form> higher_forms;  // degree >= 2
  std::vector<LTensor> l_tensors;  // nonzero, antisymmetric in the last two slots

  /// Functions (as 0-forms), then one-forms, then higher forms.
  std::vector<Form> all_forms(int dim) const;
  std::vector<std::string> describe(const ChartGeometry& chart) const;
};

/// Draws integers uniformly from [lo, hi] without depending on the standard
/// library's distribution algorithms, so corpora agree across toolchains.
class CorpusRng {
 public:
  explicit CorpusRng(std::uint64_t seed) : engine_(seed) {}
  int uniform(int lo, int hi);

 private:
  std::mt19937_64 engine_;
};

/// A nonzero, non-constant polynomial with integer coefficients.
Scalar random_polynomial(CorpusRng& rng, int nvars, const CorpusOptions& options);

Corpus make_corpus(const ChartGeometry& chart, const CorpusOptions& options);

}  // namespace gradsym
