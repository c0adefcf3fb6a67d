#include "gradsym/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace gradsym {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::reported: return "reported";
  }
  return "?";
}

int Report::count(CheckStatus s) const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(), [s](const CheckRecord& c) { return c.status == s; }));
}

std::string render_text(const Report& r) {
  std::ostringstream out;
  out << "chart " << r.chart << "  suite " << r.suite << "  seed " << r.seed << "  samples " << r.samples << "\n";
  out << "corpus:\n";
  for (std::size_t i = 0; i < r.corpus.size(); ++i) out << "  [" << i << "] " << r.corpus[i] << "\n";
  for (const auto& c : r.checks) {
    out << (c.status == CheckStatus::pass ? "PASS" : c.status == CheckStatus::fail ? "FAIL" : "NOTE") << "  " << c.id;
    if (c.criterion) out << "  (#" << c.criterion << ")";
    out << "\n      " << c.anchor << "\n";
    if (!c.detail.empty()) out << "      " << c.detail << "\n";
    if (!c.witness.empty()) out << "      witness: " << c.witness << "\n";
  }
  out << "summary: " << r.count(CheckStatus::pass) << " passed, " << r.count(CheckStatus::fail) << " failed, "
      << r.count(CheckStatus::reported) << " reported\n";
  return out.str();
}

std::string render_json(const Report& r) {
  nlohmann::ordered_json j;
  j["chart"] = r.chart;
  j["suite"] = r.suite;
  j["seed"] = r.seed;
  j["samples"] = r.samples;
  j["corpus"] = r.corpus;
  auto& checks = j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    nlohmann::ordered_json e;
    e["id"] = c.id;
    e["criterion"] = c.criterion;
    e["anchor"] = c.anchor;
    e["status"] = to_string(c.status);
    e["detail"] = c.detail;
    e["witness"] = c.witness;
    checks.push_back(std::move(e));
  }
  j["summary"] = {{"passed", r.count(CheckStatus::pass)},
                  {"failed", r.count(CheckStatus::fail)},
                  {"reported", r.count(CheckStatus::reported)}};
  return j.dump(2) + "\n";
}

}  // namespace gradsym
