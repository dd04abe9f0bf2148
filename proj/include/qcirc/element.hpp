#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "qcirc/label.hpp"
#include "qcirc/length.hpp"
#include "qcirc/span.hpp"

namespace qcirc {

// Cell bodies. At most one per cell; extra bodies are E006 diagnostics.

struct Empty {};
struct Gate {
    LabelExpr label;
};
struct Targ {};
struct Swap {};
struct MultiGateTop {
    int depth = 1;  // rows covered below the top row
    LabelExpr label;
};
struct Ghost {
    LabelExpr label;
};
struct Meter {};
struct Measure {
    LabelExpr label;
};
struct MeasureTab {
    LabelExpr label;
};
struct MeasureD {
    LabelExpr label;
};
enum class MultiMeasureStyle { Plain, D };
struct MultiMeasureTop {
    int depth = 1;
    LabelExpr label;
    MultiMeasureStyle style = MultiMeasureStyle::Plain;
};
struct Ctrl {
    int offset = 0;  // rows down to the controlled entry (negative = up)
    bool open = false;
};
struct Control {
    bool open = false;  // isolated bullet; never connects on its own
};
enum class StickDir { Left, Right, Up, Down };
struct Stick {
    StickDir dir = StickDir::Left;
    LabelExpr label;
};
struct Push {
    LabelExpr label;  // invisible, but takes up its content's space
};
struct RawLabel {
    LabelExpr label;  // zero-size inline text / `{...}` insert
};

using Element = std::variant<
    Empty, Gate, Targ, Swap, MultiGateTop, Ghost, Meter, Measure, MeasureTab, MeasureD,
    MultiMeasureTop, Ctrl, Control, Stick, Push, RawLabel>;

enum class WireKind { Horizontal, Vertical };  // \qw[k]/\cw[k] vs \qwx[k]/\cwx[k]

struct WireDecoration {
    WireKind kind = WireKind::Horizontal;
    int offset = -1;
    bool classical = false;
    Span span;
};

struct Cell {
    Element body;
    std::vector<WireDecoration> decorations;
    Span span;       // the whole entry
    Span body_span;  // the body element's tokens
};

enum class GroupStyle {
    DashedBox,
    DottedBox,
    BraceBottom,
    BraceTop,
    BraceLeft,
    BraceRight,
    ParenBottom,
    ParenTop,
    ParenLeft,
    ParenRight,
};

std::string_view group_style_name(GroupStyle style);

struct GateGroup {
    int r1 = 1, c1 = 1, r2 = 1, c2 = 1;  // 1-based inclusive region
    Length pad;                          // twice the gate-to-box spacing
    GroupStyle style = GroupStyle::DashedBox;
    Span span;
};

struct CircuitAst {
    SpacingParams params;
    std::vector<std::vector<Cell>> rows;  // rectangular after elaboration
    std::vector<GateGroup> groups;

    size_t num_rows() const {
        return rows.size();
    }
    size_t num_cols() const {
        return rows.empty() ? 0 : rows.front().size();
    }
};

/// Structural equality ignoring source spans (the JSON round trip drops them).
bool ast_equal(const CircuitAst &a, const CircuitAst &b);

}  // namespace qcirc
