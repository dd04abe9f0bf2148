#pragma once

#include <string>
#include <vector>

#include "qcirc/label.hpp"
#include "qcirc/metrics.hpp"
#include "qcirc/shapes.hpp"

namespace qcirc::detail {

/// A glyph run positioned relative to the label's left edge and main
/// baseline (dy grows downward).
struct RelRun {
    double x = 0.0;
    double dy = 0.0;
    double scale = 1.0;
    FontKind font = FontKind::Math;
    std::string text;
    double width = 0.0;
};

struct LabelBox {
    double width = 0.0;
    double ascent = 0.0;   // above the main baseline
    double descent = 0.0;  // below it
    std::vector<RelRun> runs;
};

/// Single engine behind measuring and painting, so the two can never
/// disagree about a label's size.
LabelBox layout_label(
    const LabelExpr &label,
    const FontMetrics &metrics,
    bool want_runs,
    std::vector<std::string> *unknown = nullptr);

}  // namespace qcirc::detail
