#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "gradsym/geometry.hpp"

namespace gradsym {

/// An expression value from a manifest, with where it was written.
struct ManifestEntry {
  std::string expr;
  int line = 0;
  int column = 0;  // column of the first character of expr
};

/// A chart manifest as written, before any expression is interpreted.
/// Indices are 0-based here; the text uses 1-based positions.
struct ChartManifest {
  std::string name;
  int dim = 0;
  std::vector<std::string> coords;
  std::map<std::pair<int, int>, ManifestEntry> metric;
  std::map<std::pair<int, int>, ManifestEntry> symplectic;
  std::map<std::tuple<int, int, int>, ManifestEntry> ltensor;
  std::optional<bool> kahler_expected;
};

/// Reads the sectioned key=value format:
///
///   [chart]      name=..., dim=N, coords=x,y,...   (one line or several; kahler=true|false optional)
///   [metric]     g.i.j=<expr>
///   [symplectic] w.i.j=<expr>
///   [ltensor]    L.i.j.k=<expr>
///
/// Blank lines and lines starting with '#' are ignored. Throws ParseError
/// with the line and column of the offending text.
ChartManifest read_manifest(std::string_view text);

/// Interprets the expressions and builds the chart. Missing entries default
/// by symmetry (metric), antisymmetry (symplectic, L in its last two slots)
/// or zero. Throws ParseError for bad expressions and ConstructionError
/// naming the violated invariant.
ChartGeometry build_chart(const ChartManifest& manifest);

/// read_manifest followed by build_chart.
ChartGeometry parse_manifest(std::string_view text);

/// Loads `builtin:NAME` or a manifest file path.
ChartGeometry load_chart(const std::string& source);

}  // namespace gradsym
