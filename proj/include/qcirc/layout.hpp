#pragma once

#include <string>
#include <vector>

#include "qcirc/element.hpp"
#include "qcirc/geometry.hpp"
#include "qcirc/metrics.hpp"
#include "qcirc/style.hpp"

namespace qcirc {

/// Measures a label with the embedded metrics: widths are summed advances
/// (scripts scaled, adjacent sub+sup sharing one slot), heights come from the
/// metric table, and the result is split around the math axis. Unknown
/// symbol names are appended to `unknown` when given; their width falls back
/// to 0.5em per character.
Extent measure_label(
    const LabelExpr &label,
    const FontMetrics &metrics,
    std::vector<std::string> *unknown = nullptr);

/// Per-cell extents. Boxed elements add the style's padding around their
/// label; glyph elements use fixed style extents; sticks and raw labels have
/// zero layout extent but keep their visual extent.
SizedGrid size_elements(
    const CircuitAst &ast,
    const FontMetrics &metrics,
    const StyleTable &style,
    std::vector<Diagnostic> *diagnostics = nullptr);

/// Column widths are per-column maxima (rows likewise); `@!C`/`@!R`/`@!`
/// replace them with the global maximum before centers are accumulated:
/// center(c+1) = center(c) + W(c)/2 + col_sep + W(c+1)/2.
LayoutGrid solve_grid(const SizedGrid &sized, const SpacingParams &params);

/// Resolves every wire to a center-to-center segment: explicit \qw/\qwx
/// decorations, \ctrl verticals, and the implicit leftward wire every boxed
/// or glyph gate carries. Isolated controls and sticks connect nothing.
/// Duplicate segments collapse.
ConnectorSet place_connectors(const CircuitAst &ast, const LayoutGrid &layout);

}  // namespace qcirc
