#pragma once

#include <string_view>
#include <vector>

#include "qcirc/diagnostics.hpp"
#include "qcirc/token.hpp"

namespace qcirc {

/// Tokenizes one Q-circuit expression. `%` comments run to end of line and
/// count as whitespace. `{...}`/`[...]` nest; `&` and `\\` separate cells and
/// rows; `@...` sequences are spacing parameters (only recognized outside
/// braces). Throws ParseError on unbalanced braces (E101) or a bare trailing
/// backslash (E102).
std::vector<Token> tokenize(std::string_view source);

}  // namespace qcirc
