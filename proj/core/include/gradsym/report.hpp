#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gradsym {

/// `reported` records an observation that is printed but never asserted,
/// e.g. a closed form evaluated outside the hypotheses it was stated under.
enum class CheckStatus { pass, fail, reported };

std::string to_string(CheckStatus s);

struct CheckRecord {
  std::string id;       // e.g. "axioms.even.jacobi"
  int criterion = 0;    // acceptance criterion number, 0 when none
  std::string anchor;   // the identity being checked, written out
  CheckStatus status = CheckStatus::pass;
  std::string detail;   // counts, sign outcomes
  std::string witness;  // first normalized defect on failure
};

struct Report {
  std::string suite;
  std::string chart;
  std::uint64_t seed = 0;
  int samples = 0;
  std::vector<std::string> corpus;
  std::vector<CheckRecord> checks;

  int count(CheckStatus s) const;
  bool ok() const { return count(CheckStatus::fail) == 0; }
};

std::string render_text(const Report& r);
std::string render_json(const Report& r);

}  // namespace gradsym
