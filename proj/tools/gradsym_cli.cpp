#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "gradsym/brackets.hpp"
#include "gradsym/charts.hpp"
#include "gradsym/errors.hpp"
#include "gradsym/expr_parser.hpp"
#include "gradsym/manifest.hpp"
#include "gradsym/suites.hpp"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

// Thrown after the diagnostic has already been printed.
struct ArgumentError {};

std::string kind_name(gradsym::ChartKind k) {
  switch (k) {
    case gradsym::ChartKind::kahler: return "kahler";
    case gradsym::ChartKind::para_kahler: return "para-kahler";
    case gradsym::ChartKind::other: return "other";
  }
  return "?";
}

int list_charts() {
  for (const auto& info : gradsym::builtin_charts()) {
    const auto chart = gradsym::builtin_chart(info.name);
    std::cout << info.name << "\tdim " << chart.dim() << "\t" << kind_name(info.kind) << "\t" << info.description
              << "\n";
  }
  return 0;
}

struct CheckArgs {
  std::string source;
  std::string suite = "all";
  std::uint64_t seed = 42;
  int samples = 8;
  int max_form_degree = 1;
  std::string format = "text";
};

int run_check(const CheckArgs& a) {
  const auto suite = gradsym::parse_suite(a.suite);
  if (!suite) throw gradsym::UsageError("unknown suite '" + a.suite + "'");
  const auto chart = gradsym::load_chart(a.source);
  const gradsym::Report report =
      gradsym::run_suite(chart, *suite, gradsym::SuiteOptions{a.seed, a.samples, a.max_form_degree});
  std::cout << (a.format == "json" ? gradsym::render_json(report) : gradsym::render_text(report));
  return report.ok() ? 0 : kExitFailure;
}

struct BracketArgs {
  std::string source;
  std::string alpha;
  std::string beta;
  bool odd = false;
  bool fastpath = false;
};

gradsym::Form parse_argument(const std::string& text, const gradsym::ChartGeometry& chart, const char* flag) {
  try {
    return gradsym::parse_form_expr(text, chart.coordinates());
  } catch (const gradsym::ParseError& e) {
    std::cerr << "parse error in " << flag << ": " << e.what() << "\n";
    throw ArgumentError{};
  }
}

int run_bracket(const BracketArgs& a) {
  if (a.odd && a.fastpath) throw gradsym::UsageError("--fastpath applies to the even bracket only");
  const auto chart = gradsym::load_chart(a.source);
  const gradsym::Form alpha = parse_argument(a.alpha, chart, "--alpha");
  const gradsym::Form beta = parse_argument(a.beta, chart, "--beta");
  gradsym::Form result;
  if (a.fastpath) {
    result = gradsym::bracket_fastpath_general(chart, alpha, beta);
  } else {
    auto solver = a.odd ? gradsym::ks_solver(chart) : gradsym::even_solver(chart);
    result = gradsym::hamiltonian_bracket(solver, alpha, beta);
  }
  std::cout << result.to_string(chart.coordinates()) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for graded symplectic forms and graded Poisson brackets on coordinate charts"};
  app.require_subcommand(1);

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "Run verification suites against a chart");
  check_cmd->add_option("chart", check.source, "Manifest path or builtin:NAME")->required();
  check_cmd->add_option("--suite", check.suite, "Suite to run")
      ->check(CLI::IsMember({"axioms", "theorems", "recursion", "kahler", "paracomplex", "all"}));
  check_cmd->add_option("--seed", check.seed, "Corpus seed");
  check_cmd->add_option("--samples", check.samples, "Functions and one-forms per corpus")->check(CLI::Range(1, 64));
  check_cmd->add_option("--max-form-degree", check.max_form_degree, "Highest form degree in the corpus")
      ->check(CLI::Range(0, 8));
  check_cmd->add_option("--format", check.format, "Report format")->check(CLI::IsMember({"text", "json"}));

  BracketArgs bracket;
  auto* bracket_cmd = app.add_subcommand("bracket", "Evaluate [[alpha, beta]] = D_alpha(beta)");
  bracket_cmd->add_option("chart", bracket.source, "Manifest path or builtin:NAME")->required();
  bracket_cmd->add_option("--alpha", bracket.alpha, "First argument, a form expression")->required();
  bracket_cmd->add_option("--beta", bracket.beta, "Second argument, a form expression")->required();
  bracket_cmd->add_flag("--odd", bracket.odd, "Use the odd form Theta_KS instead of Theta_{w,g}");
  bracket_cmd->add_flag("--fastpath", bracket.fastpath, "Assemble the even bracket from the closed forms");

  app.add_subcommand("charts", "List built-in charts");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (check_cmd->parsed()) return run_check(check);
    if (bracket_cmd->parsed()) return run_bracket(bracket);
    return list_charts();
  } catch (const ArgumentError&) {
    return kExitUsage;
  } catch (const gradsym::ParseError& e) {
    const std::string& src = check_cmd->parsed() ? check.source : bracket.source;
    std::cerr << "parse error: " << (src.rfind("builtin:", 0) == 0 ? "" : src + ":") << e.what() << "\n";
    return kExitUsage;
  } catch (const gradsym::ConstructionError& e) {
    std::cerr << "invalid chart: " << e.what() << "\n";
    return kExitUsage;
  } catch (const gradsym::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}
