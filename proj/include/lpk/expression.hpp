#pragma once

#include <string_view>

#include "lpk/quiver.hpp"
#include "lpk/rewriting.hpp"

namespace lpk {

/// Parses element syntax over the arrows of `q`:
///   2/3 a b* - e(v1)      (a . b)* + 1      (a* + b*).(a + b)
/// Arrows by id, `*` is a postfix involution, `e(<vertex>)` a vertex idempotent,
/// juxtaposition or `.` is the product, integers and fractions are scalars. A token
/// that is both a number and a declared arrow id names the arrow. Identifiers may
/// contain any character other than whitespace and `+-*./()`.
/// Throws ParseError (line 1, 1-based column) on malformed input or unknown ids.
RawExpression parse_expression(const Quiver& q, std::string_view text);

}  // namespace lpk
