#include "qcirc/layout.hpp"

#include <algorithm>
#include <set>

#include "label_runs.hpp"

namespace qcirc {

namespace detail {

namespace {

struct Engine {
    const FontMetrics &metrics;
    bool want_runs;
    std::vector<std::string> *unknown;

    double text_advance(const std::string &text, double scale) const {
        double w = 0.0;
        for (char c : text) {
            w += metrics.advance(c) * scale;
        }
        return w;
    }

    void add_glyph_box(LabelBox &box, double scale, double dy) const {
        box.ascent = std::max(box.ascent, metrics.cap_height * scale - dy);
        box.descent = std::max(box.descent, metrics.descender * scale + dy);
    }

    void emit(LabelBox &box, double x, double dy, double scale, FontKind font, std::string text,
              double width) const {
        if (want_runs && !text.empty()) {
            box.runs.push_back(RelRun{x, dy, scale, font, std::move(text), width});
        }
    }

    double width_of(const LabelExpr &nodes, double scale, FontKind font) const {
        LabelBox scratch;
        Engine measure_only{metrics, false, nullptr};
        measure_only.walk(nodes, scratch, 0.0, 0.0, scale, font);
        return scratch.width;
    }

    // Lays `nodes` starting at x0 and returns the advance consumed. Ascent,
    // descent and runs accumulate into `box`.
    double walk(const LabelExpr &nodes, LabelBox &box, double x0, double dy, double scale,
                FontKind font) const {
        double x = x0;
        for (size_t i = 0; i < nodes.size(); i++) {
            const LabelNode &node = nodes[i];
            switch (node.kind) {
                case LabelNode::Kind::Text: {
                    if (node.text.empty()) {
                        break;
                    }
                    double w = text_advance(node.text, scale);
                    emit(box, x, dy, scale, font, node.text, w);
                    add_glyph_box(box, scale, dy);
                    x += w;
                    break;
                }
                case LabelNode::Kind::Symbol: {
                    double adv = metrics.symbol_advance(node.text);
                    std::string glyph{symbol_glyph(node.text)};
                    if (adv < 0.0) {
                        adv = metrics.fallback_char_width * static_cast<double>(node.text.size());
                        glyph = node.text;  // unknown symbols render as their name
                        if (unknown) {
                            unknown->push_back(node.text);
                        }
                    }
                    emit(box, x, dy, scale, font, std::move(glyph), adv * scale);
                    add_glyph_box(box, scale, dy);
                    x += adv * scale;
                    break;
                }
                case LabelNode::Kind::Style: {
                    FontKind inner = node.style == LabelStyle::Calligraphic
                                         ? FontKind::Calligraphic
                                         : FontKind::Upright;
                    x = walk(node.content, box, x, dy, scale, inner);
                    break;
                }
                case LabelNode::Kind::Ket:
                case LabelNode::Kind::Bra: {
                    bool ket = node.kind == LabelNode::Kind::Ket;
                    double bar = metrics.advance('|') * scale;
                    double angle = metrics.symbol_advance(ket ? "rangle" : "langle") * scale;
                    emit(box, x, dy, scale, font, ket ? "|" : "⟨", ket ? bar : angle);
                    add_glyph_box(box, scale, dy);
                    x += ket ? bar : angle;
                    x = walk(node.content, box, x, dy, scale, font);
                    emit(box, x, dy, scale, font, ket ? "⟩" : "|", ket ? angle : bar);
                    x += ket ? angle : bar;
                    break;
                }
                case LabelNode::Kind::Rule: {
                    double w = node.rule_width.to_em() * scale;
                    double h = node.rule_height.to_em() * scale;
                    box.ascent = std::max(box.ascent, h - dy);
                    box.descent = std::max(box.descent, dy);
                    x += w;
                    break;
                }
                case LabelNode::Kind::Sub:
                case LabelNode::Kind::Sup: {
                    double script_scale = scale * metrics.script_scale;
                    auto shift = [&](const LabelNode &script) {
                        return script.kind == LabelNode::Kind::Sub ? dy + metrics.sub_drop * scale
                                                                   : dy - metrics.sup_raise * scale;
                    };
                    // an immediately following opposite script stacks in the
                    // same horizontal slot, like M_i^j
                    bool paired = i + 1 < nodes.size() &&
                                  (nodes[i + 1].kind == LabelNode::Kind::Sub ||
                                   nodes[i + 1].kind == LabelNode::Kind::Sup) &&
                                  nodes[i + 1].kind != node.kind;
                    double w1 = width_of(node.content, script_scale, font);
                    walk(node.content, box, x, shift(node), script_scale, font);
                    if (paired) {
                        const LabelNode &other = nodes[i + 1];
                        double w2 = width_of(other.content, script_scale, font);
                        walk(other.content, box, x, shift(other), script_scale, font);
                        x += std::max(w1, w2);
                        i++;
                    } else {
                        x += w1;
                    }
                    break;
                }
            }
        }
        box.width = std::max(box.width, x - x0);
        return x;
    }
};

}  // namespace

LabelBox layout_label(
    const LabelExpr &label, const FontMetrics &metrics, bool want_runs,
    std::vector<std::string> *unknown) {
    LabelBox box;
    Engine engine{metrics, want_runs, unknown};
    engine.walk(label, box, 0.0, 0.0, 1.0, FontKind::Math);
    return box;
}

}  // namespace detail

Extent measure_label(
    const LabelExpr &label, const FontMetrics &metrics, std::vector<std::string> *unknown) {
    detail::LabelBox box = detail::layout_label(label, metrics, false, unknown);
    if (box.ascent <= 0.0 && box.descent <= 0.0) {
        return Extent{box.width, 0.0, 0.0};  // dimensionless props keep zero height
    }
    return Extent{
        box.width,
        std::max(0.0, box.ascent - metrics.axis_height),
        box.descent + metrics.axis_height};
}

namespace {

struct Sizer {
    const FontMetrics &metrics;
    const StyleTable &style;
    std::vector<Diagnostic> *diags;
    int row = 0;
    int col = 0;
    const Span *span = nullptr;

    Extent boxed(const LabelExpr &label) const {
        Extent e = measure(label);
        return Extent{
            e.width + 2.0 * style.gate_pad_x,
            e.above + style.gate_pad_y,
            e.below + style.gate_pad_y};
    }

    Extent measure(const LabelExpr &label) const {
        std::vector<std::string> unknown;
        Extent e = measure_label(label, metrics, &unknown);
        if (diags) {
            for (const auto &name : unknown) {
                diags->push_back(Diagnostic{
                    Severity::Warning, W101_UNKNOWN_SYMBOL, span ? *span : Span{},
                    "unknown symbol '\\" + name + "' measured as a fallback box", row, col});
            }
        }
        return e;
    }

    Extent glyph(double half_width, double half_height) const {
        return Extent{2.0 * half_width, half_height, half_height};
    }

    std::pair<Extent, Extent> operator()(const Empty &) const {
        return {Extent{}, Extent{}};
    }
    std::pair<Extent, Extent> operator()(const Gate &g) const {
        Extent e = boxed(g.label);
        return {e, e};
    }
    std::pair<Extent, Extent> operator()(const Targ &) const {
        Extent e = glyph(style.targ_radius, style.targ_radius);
        return {e, e};
    }
    std::pair<Extent, Extent> operator()(const Swap &) const {
        Extent e = glyph(style.swap_half, style.swap_half);
        return {e, e};
    }
    std::pair<Extent, Extent> operator()(const MultiGateTop &m) const {
        Extent e = boxed(m.label);
        return {e, e};
    }
    std::pair<Extent, Extent> operator()(const Ghost &g) const {
        // a ghost reserves exactly what the gate box with its label needs
        Extent e = boxed(g.label);
        return {e, e};
    }
    std::pair<Extent, Extent> operator()(const Meter &) const {
        Extent e{style.meter_width, style.meter_height / 2.0, style.meter_height / 2.0};
        return {e, e};
    }
    std::pair<Extent, Extent> operator()(const Measure &m) const {
        Extent e = boxed(m.label);
        return {e, e};
    }
    std::pair<Extent, Extent> operator()(const MeasureTab &m) const {
        Extent e = boxed(m.label);
        return {e, e};
    }
    std::pair<Extent, Extent> operator()(const MeasureD &m) const {
        Extent e = boxed(m.label);
        return {e, e};
    }
    std::pair<Extent, Extent> operator()(const MultiMeasureTop &m) const {
        Extent e = boxed(m.label);
        return {e, e};
    }
    std::pair<Extent, Extent> operator()(const Ctrl &) const {
        Extent e = glyph(style.ctrl_radius, style.ctrl_radius);
        return {e, e};
    }
    std::pair<Extent, Extent> operator()(const Control &) const {
        Extent e = glyph(style.ctrl_radius, style.ctrl_radius);
        return {e, e};
    }
    std::pair<Extent, Extent> operator()(const Stick &s) const {
        return {Extent{}, measure(s.label)};  // visible but layout-invisible
    }
    std::pair<Extent, Extent> operator()(const Push &p) const {
        Extent e = measure(p.label);  // invisible but takes up space
        return {e, e};
    }
    std::pair<Extent, Extent> operator()(const RawLabel &l) const {
        return {Extent{}, measure(l.label)};
    }
};

}  // namespace

SizedGrid size_elements(
    const CircuitAst &ast, const FontMetrics &metrics, const StyleTable &style,
    std::vector<Diagnostic> *diagnostics) {
    size_t rows = ast.num_rows();
    size_t cols = ast.num_cols();
    SizedGrid sized{Grid<Extent>(rows, cols), Grid<Extent>(rows, cols)};
    for (size_t r = 0; r < rows; r++) {
        for (size_t c = 0; c < cols; c++) {
            const Cell &cell = ast.rows[r][c];
            Sizer sizer{metrics, style, diagnostics, static_cast<int>(r) + 1,
                        static_cast<int>(c) + 1, &cell.body_span};
            auto [layout, visual] = std::visit(sizer, cell.body);
            sized.layout.at(r, c) = layout;
            sized.visual.at(r, c) = visual;
        }
    }
    return sized;
}

LayoutGrid solve_grid(const SizedGrid &sized, const SpacingParams &params) {
    size_t rows = sized.layout.rows();
    size_t cols = sized.layout.cols();
    LayoutGrid grid;
    grid.sized = sized;
    grid.col_width.assign(cols, 0.0);
    grid.row_above.assign(rows, 0.0);
    grid.row_below.assign(rows, 0.0);

    for (size_t r = 0; r < rows; r++) {
        for (size_t c = 0; c < cols; c++) {
            const Extent &e = sized.layout.at(r, c);
            grid.col_width[c] = std::max(grid.col_width[c], e.width);
            grid.row_above[r] = std::max(grid.row_above[r], e.above);
            grid.row_below[r] = std::max(grid.row_below[r], e.below);
        }
    }

    bool uniform_cols = params.uniform == Uniform::Cols || params.uniform == Uniform::All;
    bool uniform_rows = params.uniform == Uniform::Rows || params.uniform == Uniform::All;
    if (uniform_cols && cols > 0) {
        double w = *std::max_element(grid.col_width.begin(), grid.col_width.end());
        std::fill(grid.col_width.begin(), grid.col_width.end(), w);
    }
    if (uniform_rows && rows > 0) {
        double above = *std::max_element(grid.row_above.begin(), grid.row_above.end());
        double below = *std::max_element(grid.row_below.begin(), grid.row_below.end());
        std::fill(grid.row_above.begin(), grid.row_above.end(), above);
        std::fill(grid.row_below.begin(), grid.row_below.end(), below);
    }

    double col_sep = params.col_sep.to_em();
    double row_sep = params.row_sep.to_em();
    grid.col_center.resize(cols);
    for (size_t c = 0; c < cols; c++) {
        grid.col_center[c] = c == 0 ? grid.col_width[0] / 2.0
                                    : grid.col_center[c - 1] + grid.col_width[c - 1] / 2.0 + col_sep +
                                          grid.col_width[c] / 2.0;
    }
    grid.row_center.resize(rows);
    for (size_t r = 0; r < rows; r++) {
        grid.row_center[r] = r == 0 ? grid.row_above[0]
                                    : grid.row_center[r - 1] + grid.row_below[r - 1] + row_sep +
                                          grid.row_above[r];
    }
    return grid;
}

namespace {

struct SegmentKey {
    bool vertical;
    bool classical;
    int r1, c1, r2, c2;

    bool operator<(const SegmentKey &other) const {
        return std::tie(vertical, classical, r1, c1, r2, c2) <
               std::tie(other.vertical, other.classical, other.r1, other.c1, other.r2, other.c2);
    }
};

struct ConnectorBuilder {
    const LayoutGrid &layout;
    std::set<SegmentKey> seen;
    std::vector<Segment> segments;

    Point center(const CellRef &ref) const {
        return Point{layout.col_center[ref.col - 1], layout.row_center[ref.row - 1]};
    }

    void add(bool vertical, bool classical, CellRef from, CellRef to) {
        SegmentKey key{vertical, classical, from.row, from.col, to.row, to.col};
        if (to.row < from.row || (to.row == from.row && to.col < from.col)) {
            key = SegmentKey{vertical, classical, to.row, to.col, from.row, from.col};
        }
        if (!seen.insert(key).second) {
            return;
        }
        segments.push_back(Segment{vertical, classical, from, to, center(from), center(to)});
    }
};

bool has_implicit_left_wire(const Element &element) {
    return std::holds_alternative<Gate>(element) || std::holds_alternative<Targ>(element) ||
           std::holds_alternative<Swap>(element) || std::holds_alternative<Meter>(element) ||
           std::holds_alternative<Measure>(element) || std::holds_alternative<MeasureTab>(element) ||
           std::holds_alternative<MeasureD>(element) ||
           std::holds_alternative<MultiGateTop>(element) ||
           std::holds_alternative<MultiMeasureTop>(element) || std::holds_alternative<Ghost>(element);
}

}  // namespace

ConnectorSet place_connectors(const CircuitAst &ast, const LayoutGrid &layout) {
    ConnectorBuilder builder{layout};
    const int rows = static_cast<int>(ast.num_rows());
    const int cols = static_cast<int>(ast.num_cols());

    for (int r = 1; r <= rows; r++) {
        for (int c = 1; c <= cols; c++) {
            const Cell &cell = ast.rows[r - 1][c - 1];

            if (const auto *ctrl = std::get_if<Ctrl>(&cell.body)) {
                builder.add(true, false, CellRef{r, c}, CellRef{r + ctrl->offset, c});
                builder.add(false, false, CellRef{r, c}, CellRef{r, c - 1});
            } else if (has_implicit_left_wire(cell.body)) {
                builder.add(false, false, CellRef{r, c}, CellRef{r, c - 1});
            }

            for (const WireDecoration &dec : cell.decorations) {
                if (dec.kind == WireKind::Horizontal) {
                    builder.add(false, dec.classical, CellRef{r, c}, CellRef{r, c + dec.offset});
                } else {
                    builder.add(true, dec.classical, CellRef{r, c}, CellRef{r + dec.offset, c});
                }
            }
        }
    }
    return ConnectorSet{std::move(builder.segments)};
}

}  // namespace qcirc
