#pragma once

#include <vector>

#include "qcirc/diagnostics.hpp"
#include "qcirc/element.hpp"
#include "qcirc/parse.hpp"

namespace qcirc {

struct ElaborateResult {
    CircuitAst ast;
    std::vector<Diagnostic> diagnostics;
};

/// Maps raw cells onto typed elements and decorations, defaults optional
/// arguments (\qwx/\cwx and \qw/\cw connect one entry up/left), hoists
/// \gategroup marks to the grid, and pads rows to a rectangle. Problems are
/// reported as diagnostics; an AST is always produced.
ElaborateResult elaborate(const ParsedCircuit &parsed);

}  // namespace qcirc
