#pragma once

#include <string_view>
#include <vector>

#include "qcirc/length.hpp"
#include "qcirc/token.hpp"

namespace qcirc {

/// One untyped grid entry: the tokens between separators. Rows may still be
/// ragged at this stage; the elaborator pads them.
struct RawCell {
    std::vector<Token> items;
    Span span;
};

struct ParsedCircuit {
    SpacingParams params;
    std::vector<std::vector<RawCell>> rows;
};

/// Parses a `\Qcircuit @params { rows }` expression. The `\Qcircuit` wrapper
/// is optional (`@params { rows }` and `{ rows }` are accepted), as is a
/// surrounding `\[ ... \]` math display. Spacing defaults to 1em when a
/// parameter is absent. Throws ParseError (E101..E106).
ParsedCircuit parse(std::string_view source);

}  // namespace qcirc
