#include <doctest.h>

#include <json.hpp>

#include "gradsym/charts.hpp"
#include "gradsym/corpus.hpp"
#include "gradsym/suites.hpp"

using namespace gradsym;

TEST_CASE("corpora are reproducible from the seed") {
  const ChartGeometry c = builtin_chart("sphere2");
  const Corpus a = make_corpus(c, CorpusOptions{});
  const Corpus b = make_corpus(c, CorpusOptions{});
  CHECK(a.describe(c) == b.describe(c));
  CHECK(a.functions.size() >= 8);
  CHECK(a.one_forms.size() >= 8);
  CHECK(a.l_tensors.size() >= 3);
  CorpusOptions other;
  other.seed = 7;
  CHECK(make_corpus(c, other).describe(c) != a.describe(c));
  for (const auto& f : a.functions) CHECK(!f.is_constant());
}

TEST_CASE("corpus rng stays in range") {
  CorpusRng rng(1);
  for (int i = 0; i < 1000; ++i) {
    const int v = rng.uniform(-3, 3);
    CHECK(v >= -3);
    CHECK(v <= 3);
  }
}

TEST_CASE("reports are deterministic") {
  const ChartGeometry c = builtin_chart("flat2");
  const Report a = run_suite(c, Suite::theorems, SuiteOptions{});
  const Report b = run_suite(c, Suite::theorems, SuiteOptions{});
  CHECK(render_text(a) == render_text(b));
  CHECK(render_json(a) == render_json(b));

  const auto j = nlohmann::json::parse(render_json(a));
  CHECK(j["chart"] == "flat2");
  CHECK(j["seed"] == 42);
  CHECK(j["checks"].size() == a.checks.size());
}

TEST_CASE("suite names") {
  CHECK(parse_suite("kahler") == Suite::kahler);
  CHECK(!parse_suite("everything"));
  for (Suite s : {Suite::axioms, Suite::theorems, Suite::recursion, Suite::kahler, Suite::paracomplex, Suite::all})
    CHECK(parse_suite(to_string(s)) == s);
}

TEST_CASE("flat2 passes the full suite") {
  const Report r = run_suite(builtin_chart("flat2"), Suite::all, SuiteOptions{42, 8, 1});
  for (const auto& check : r.checks)
    CHECK_MESSAGE(check.status != CheckStatus::fail, check.id << ": " << check.detail);
  CHECK(r.ok());
}
