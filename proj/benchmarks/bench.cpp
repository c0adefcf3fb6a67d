#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "gradsym/brackets.hpp"
#include "gradsym/charts.hpp"
#include "gradsym/corpus.hpp"
#include "gradsym/expr_parser.hpp"

using namespace gradsym;

namespace {

const std::vector<std::string> kXyzw{"x", "y", "z", "w"};

void BM_PolynomialGcd(benchmark::State& state) {
  const Scalar a = parse_scalar_expr("(1 + x^2 + y^2 + z^2 + w^2)^3 * (x*y - z + 2)", kXyzw);
  const Scalar b = parse_scalar_expr("(1 + x^2 + y^2 + z^2 + w^2)^2 * (x - y*w^2 + 1)", kXyzw);
  for (auto _ : state) benchmark::DoNotOptimize(gcd(a.numerator(), b.numerator()));
}
BENCHMARK(BM_PolynomialGcd);

void BM_RationalArithmetic(benchmark::State& state) {
  const Scalar a = parse_scalar_expr("x*y/(1 + x^2 + y^2 + z^2 + w^2)^2", kXyzw);
  const Scalar b = parse_scalar_expr("(z - w^3)/(1 + x^2 + y^2 + z^2 + w^2)", kXyzw);
  for (auto _ : state) benchmark::DoNotOptimize((a + b) * (a - b) / b);
}
BENCHMARK(BM_RationalArithmetic);

void BM_SolveHamiltonian(benchmark::State& state, const char* chart_name, bool one_form) {
  const ChartGeometry chart = builtin_chart(chart_name);
  const GradedTwoForm theta = build_theta(chart, ThetaVariant::omega_g);
  const Corpus corpus = make_corpus(chart, CorpusOptions{});
  const Form a = one_form ? corpus.one_forms.front() : Form(chart.dim(), corpus.functions.front());
  for (auto _ : state) benchmark::DoNotOptimize(solve_hamiltonian(chart, theta, a));
}
BENCHMARK_CAPTURE(BM_SolveHamiltonian, sphere2_function, "sphere2", false);
BENCHMARK_CAPTURE(BM_SolveHamiltonian, sphere2_one_form, "sphere2", true);
BENCHMARK_CAPTURE(BM_SolveHamiltonian, sphere2x2_function, "sphere2x2", false)->Unit(benchmark::kMillisecond);

void BM_EvenBracket(benchmark::State& state, const char* chart_name, bool fastpath) {
  const ChartGeometry chart = builtin_chart(chart_name);
  const Corpus corpus = make_corpus(chart, CorpusOptions{});
  const Form a(chart.dim(), corpus.functions[0]);
  const Form b = corpus.one_forms[0];
  for (auto _ : state) {
    if (fastpath) {
      benchmark::DoNotOptimize(bracket_fastpath_general(chart, a, b));
    } else {
      HamiltonianSolver solver = even_solver(chart);
      benchmark::DoNotOptimize(even_bracket(solver, a, b));
    }
  }
}
BENCHMARK_CAPTURE(BM_EvenBracket, sphere2_solver, "sphere2", false)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_EvenBracket, sphere2_fastpath, "sphere2", true)->Unit(benchmark::kMillisecond);

void BM_KsBracketGenerator(benchmark::State& state) {
  const ChartGeometry chart = builtin_chart("halfplane");
  const Corpus corpus = make_corpus(chart, CorpusOptions{});
  for (auto _ : state) benchmark::DoNotOptimize(ks_bracket_generator(chart, corpus.one_forms[0], corpus.one_forms[1]));
}
BENCHMARK(BM_KsBracketGenerator);

}  // namespace

BENCHMARK_MAIN();
