#pragma once

#include <span>
#include <string>
#include <string_view>

#include "gradsym/form.hpp"

namespace gradsym {

/// Parses a differential-form expression over the given coordinates.
///
/// Grammar: sums and differences of products; `*` multiplies (wedge for
/// forms), `/` divides by a nonzero 0-form, `^` followed by an integer is a
/// power and otherwise a wedge. `d<coord>` is a coordinate differential and
/// `d(...)` the exterior derivative. Operators of equal precedence associate
/// left to right.
///
/// Errors are ParseError with line 1 and the 1-based column, offset by
/// `column_offset` so callers embedding the text can report absolute columns.
Form parse_form_expr(std::string_view text, std::span<const std::string> coords, int line = 1,
                     int column_offset = 0);

/// Same grammar, but the result must be a 0-form.
Scalar parse_scalar_expr(std::string_view text, std::span<const std::string> coords, int line = 1,
                         int column_offset = 0);

}  // namespace gradsym
