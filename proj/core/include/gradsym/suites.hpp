#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gradsym/corpus.hpp"
#include "gradsym/report.hpp"

namespace gradsym {

enum class Suite { axioms, theorems, recursion, kahler, paracomplex, all };

std::optional<Suite> parse_suite(std::string_view name);
std::string to_string(Suite s);

/// Independent groups of checks. A suite is a fixed list of groups.
enum class CheckGroup {
  even_axioms,
  ks_axioms,
  extension,
  ks_cross_oracle,
  theta_theorems,
  lambda_lemma,
  l_characterization,
  defect,
  j_theorems,
  locally_hamiltonian,
  construction,
  solver_soundness,
  parity_structure,
  recursion,
  kahler_identities,
  fastpath,
  paracomplex,
};

std::vector<CheckGroup> suite_groups(Suite s);

struct SuiteOptions {
  std::uint64_t seed = 42;
  int samples = 8;
  int max_form_degree = 1;
};

/// J^2 = -Id and nabla J = 0.
bool is_kahler(const ChartGeometry& chart);
/// J^2 = +Id and nabla J = 0.
bool is_para_kahler(const ChartGeometry& chart);

/// Runs check groups against one chart, sharing the corpus and the
/// Hamiltonian solutions between groups.
class SuiteRunner {
 public:
  SuiteRunner(ChartGeometry chart, SuiteOptions options);
  ~SuiteRunner();
  SuiteRunner(SuiteRunner&&) noexcept;

  const ChartGeometry& chart() const;
  const Corpus& corpus() const;

  std::vector<CheckRecord> run(CheckGroup group);
  Report run_suite(Suite suite);

 private:
  struct State;
  std::unique_ptr<State> state_;
};

Report run_suite(const ChartGeometry& chart, Suite suite, const SuiteOptions& options);

}  // namespace gradsym
