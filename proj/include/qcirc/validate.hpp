#pragma once

#include <vector>

#include "qcirc/diagnostics.hpp"
#include "qcirc/element.hpp"

namespace qcirc {

/// Checks placement rules on an elaborated AST:
///   E001  leftward-connecting element in column 1 (sticks, labels, pushes
///         and empty entries excepted)
///   E002  control/wire offset leaves the grid
///   E005  multigate/multimeasure depth extends past the last row
///   E007  offset or depth argument invalid (\qw[k>=0], \qwx[0], \ctrl{0},
///         \multigate{<1})
///   W001  ghost with no multigate covering it
///   W002  gategroup region out of bounds (group dropped at render time)
///   W003  ghost label width differs from its multigate's
/// Diagnostics come back in row-major source order.
std::vector<Diagnostic> validate(const CircuitAst &ast);

}  // namespace qcirc
