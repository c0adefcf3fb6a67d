#pragma once

#include <string>
#include <vector>

#include "gradsym/charts.hpp"
#include "gradsym/expr_parser.hpp"

namespace gradsym::test {

inline const std::vector<std::string>& xy() {
  static const std::vector<std::string> names{"x", "y"};
  return names;
}

inline Form form(const std::string& text, const std::vector<std::string>& coords = xy()) {
  return parse_form_expr(text, coords);
}

inline Scalar scalar(const std::string& text, const std::vector<std::string>& coords = xy()) {
  return parse_scalar_expr(text, coords);
}

inline VectorField field(const std::vector<std::string>& components, const std::vector<std::string>& coords = xy()) {
  std::vector<Scalar> out;
  for (const auto& c : components) out.push_back(scalar(c, coords));
  return VectorField(out);
}

}  // namespace gradsym::test
