#pragma once

#include "liemod/scalar.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace liemod {

/// Parses a scalar expression:
///   expr   := ['-'|'+'] term (('+'|'-') term)*
///   term   := factor (('*'|'/')? factor)*
///   factor := INT | NAME | '(' expr ')' | factor '^' INT
/// Juxtaposition multiplies ("2p", "(p+q)r").  '/' is accepted so rational
/// points like "1/3" can be written with the same syntax.
///
/// When `params` is non-empty, names outside it are rejected, and polynomials
/// are built over that variable order.  `line` and `column` locate `text`
/// inside a larger file for error messages.
Scalar parse_scalar(std::string_view text, const std::vector<std::string>& params = {},
                    int line = 0, int column = 1);

} // namespace liemod
