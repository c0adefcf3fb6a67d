// Prints one PASS/FAIL line per acceptance criterion and exits nonzero if any fails.
//
//   acceptance [--seed N] [--samples K] [--verbose] [--only N,N,...]

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gradsym/charts.hpp"
#include "gradsym/suites.hpp"

using namespace gradsym;

namespace {

using G = CheckGroup;

const std::vector<std::string> kAll{"flat2", "flat4", "sphere2", "halfplane", "tlift1", "tlift1q", "sphere2x2", "cp2"};
const std::vector<std::string> kKahler{"flat2", "flat4", "sphere2", "halfplane", "sphere2x2", "cp2"};

struct Criterion {
  int id;
  std::string title;
  std::vector<G> groups;
  std::vector<std::string> charts;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list{
      {1, "graded Poisson axioms, even (k = 0) and KS (k = -1) brackets", {G::even_axioms, G::ks_axioms},
       {"flat2", "sphere2", "halfplane", "tlift1q"}},
      {2, "extension: pi_0 [[f,h]] = {f,h}", {G::extension}, kAll},
      {3, "iota_d Theta_{w,g} = lambda_w and L^G_d Theta_{w,g} = Theta_KS", {G::theta_theorems}, kAll},
      {4, "<d; lambda_g> = 0", {G::lambda_lemma}, kAll},
      {5, "iota_d Theta_{w,g,L} = lambda_w exactly when L = 0", {G::l_characterization}, kAll},
      {6, "derivative defect of the even bracket and its derivation form", {G::defect}, {"flat2", "sphere2"}},
      {7, "parity structure of D_f and D_df", {G::parity_structure}, kAll},
      {8, "recursion formulas versus the generic solver", {G::recursion}, kAll},
      {9, "Kahler identities K^1 = -d^nabla X_f, K^{2i+1} = (-1)^(i+1) d^nabla K^{2i}", {G::kahler_identities},
       {"flat2", "sphere2", "halfplane"}},
      {10, "closed-form brackets versus the solver on Kahler charts", {G::fastpath}, kKahler},
      {11, "D_w = i_J, iota_{i_J} lambda_g = 2w, nabla J symmetry", {G::j_theorems}, kAll},
      {12, "locally Hamiltonian criterion for Theta_{w,g,L}", {G::locally_hamiltonian}, kAll},
      {13, "para-Kahler structure of tangent lifts", {G::paracomplex}, {"tlift1", "tlift1q"}},
      {14, "Theta_{w,g} constructed three ways, det = det w det g", {G::construction}, kAll},
      {15, "KS bracket: Hamiltonian method versus generator, [[df,dh]] = d{f,h}", {G::ks_cross_oracle}, kAll},
  };
  return list;
}

struct Options {
  std::uint64_t seed = 42;
  int samples = 8;
  bool verbose = false;
  std::set<int> only;
};

Options parse_args(int argc, char** argv) {
  Options o;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    auto value = [&]() -> std::string {
      if (i + 1 >= argc) {
        std::cerr << "missing value for " << a << "\n";
        std::exit(2);
      }
      return argv[++i];
    };
    if (a == "--seed") {
      o.seed = std::stoull(value());
    } else if (a == "--samples") {
      o.samples = std::stoi(value());
    } else if (a == "--verbose") {
      o.verbose = true;
    } else if (a == "--only") {
      std::stringstream ss(value());
      std::string item;
      while (std::getline(ss, item, ',')) o.only.insert(std::stoi(item));
    } else {
      std::cerr << "unknown argument " << a << "\n";
      std::exit(2);
    }
  }
  return o;
}

struct Tagged {
  std::string chart;
  CheckRecord record;
};

}  // namespace

int main(int argc, char** argv) {
  const Options opt = parse_args(argc, argv);
  std::vector<Criterion> selected;
  for (const auto& c : criteria())
    if (opt.only.empty() || opt.only.count(c.id)) selected.push_back(c);

  // chart -> groups to run, in criterion order
  std::map<std::string, std::vector<G>> plan;
  for (const auto& c : selected)
    for (const auto& chart : c.charts)
      for (G g : c.groups) {
        auto& groups = plan[chart];
        if (std::find(groups.begin(), groups.end(), g) == groups.end()) groups.push_back(g);
      }

  std::map<std::pair<std::string, G>, std::vector<CheckRecord>> results;
  for (const auto& chart : kAll) {
    if (!plan.count(chart)) continue;
    const auto start = std::chrono::steady_clock::now();
    SuiteRunner runner(builtin_chart(chart), SuiteOptions{opt.seed, opt.samples, 1});
    for (G g : plan[chart]) {
      try {
        results[{chart, g}] = runner.run(g);
      } catch (const std::exception& e) {
        results[{chart, g}] = {CheckRecord{"exception", 0, "", CheckStatus::fail, e.what(), ""}};
      }
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cerr << "  ran " << chart << " in " << secs << " s\n";
  }

  bool all_ok = true;
  for (const auto& c : selected) {
    std::vector<Tagged> records;
    for (const auto& chart : c.charts)
      for (G g : c.groups)
        for (const auto& r : results[{chart, g}])
          if (r.criterion == c.id || r.id == "exception") records.push_back({chart, r});
    int pass = 0, fail = 0, noted = 0;
    const Tagged* first_fail = nullptr;
    for (const auto& t : records) {
      if (t.record.status == CheckStatus::pass) ++pass;
      if (t.record.status == CheckStatus::reported) ++noted;
      if (t.record.status == CheckStatus::fail) {
        ++fail;
        if (!first_fail) first_fail = &t;
      }
    }
    const bool ok = fail == 0 && pass > 0;
    all_ok = all_ok && ok;
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.title << "  [" << pass << " checks passed, "
              << fail << " failed, " << noted << " reported]";
    if (first_fail)
      std::cout << "  first failure: " << first_fail->chart << " " << first_fail->record.id << ": "
                << first_fail->record.detail;
    std::cout << "\n";
    if (opt.verbose)
      for (const auto& t : records) {
        const char* tag = t.record.status == CheckStatus::pass ? "pass" : t.record.status == CheckStatus::fail ? "FAIL" : "note";
        std::cout << "      " << tag << "  " << t.chart << "  " << t.record.id << "  " << t.record.detail << "\n";
        if (t.record.status != CheckStatus::pass && !t.record.witness.empty())
          std::cout << "            witness: " << t.record.witness << "\n";
      }
  }
  return all_ok ? 0 : 1;
}
