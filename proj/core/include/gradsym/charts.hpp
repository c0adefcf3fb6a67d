#pragma once

#include <string>
#include <vector>

#include "gradsym/geometry.hpp"

namespace gradsym {

enum class ChartKind { kahler, para_kahler, other };

struct BuiltinChartInfo {
  std::string name;
  std::string description;
  ChartKind kind;
};

const std::vector<BuiltinChartInfo>& builtin_charts();
/// Throws UsageError for an unknown name.
ChartGeometry builtin_chart(const std::string& name);
const BuiltinChartInfo& builtin_chart_info(const std::string& name);

/// For tangent lifts, the base metric the chart was built from (empty otherwise).
Matrix builtin_base_metric(const std::string& name);

}  // namespace gradsym
