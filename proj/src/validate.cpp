#include "qcirc/validate.hpp"

#include <algorithm>
#include <cmath>

#include "qcirc/layout.hpp"

namespace qcirc {

namespace {

// Elements that implicitly extend a wire back to the previous column.
bool is_leftward(const Element &element) {
    return std::holds_alternative<Gate>(element) || std::holds_alternative<Targ>(element) ||
           std::holds_alternative<Swap>(element) || std::holds_alternative<Ctrl>(element) ||
           std::holds_alternative<Meter>(element) || std::holds_alternative<Measure>(element) ||
           std::holds_alternative<MeasureTab>(element) || std::holds_alternative<MeasureD>(element) ||
           std::holds_alternative<MultiGateTop>(element) ||
           std::holds_alternative<MultiMeasureTop>(element) || std::holds_alternative<Ghost>(element);
}

std::string element_name(const Element &element) {
    struct Namer {
        std::string operator()(const Empty &) const { return "entry"; }
        std::string operator()(const Gate &) const { return "\\gate"; }
        std::string operator()(const Targ &) const { return "\\targ"; }
        std::string operator()(const Swap &) const { return "\\qswap"; }
        std::string operator()(const MultiGateTop &) const { return "\\multigate"; }
        std::string operator()(const Ghost &) const { return "\\ghost"; }
        std::string operator()(const Meter &) const { return "\\meter"; }
        std::string operator()(const Measure &) const { return "\\measure"; }
        std::string operator()(const MeasureTab &) const { return "\\measuretab"; }
        std::string operator()(const MeasureD &) const { return "\\measureD"; }
        std::string operator()(const MultiMeasureTop &m) const {
            return m.style == MultiMeasureStyle::D ? "\\multimeasureD" : "\\multimeasure";
        }
        std::string operator()(const Ctrl &c) const { return c.open ? "\\ctrlo" : "\\ctrl"; }
        std::string operator()(const Control &c) const { return c.open ? "\\controlo" : "\\control"; }
        std::string operator()(const Stick &s) const {
            switch (s.dir) {
                case StickDir::Left: return "\\lstick";
                case StickDir::Right: return "\\rstick";
                case StickDir::Up: return "\\ustick";
                case StickDir::Down: return "\\dstick";
            }
            return "stick";
        }
        std::string operator()(const Push &) const { return "\\push"; }
        std::string operator()(const RawLabel &) const { return "label"; }
    };
    return std::visit(Namer{}, element);
}

}  // namespace

std::vector<Diagnostic> validate(const CircuitAst &ast) {
    std::vector<Diagnostic> diags;
    const int num_rows = static_cast<int>(ast.num_rows());
    const int num_cols = static_cast<int>(ast.num_cols());
    const auto &metrics = default_metrics();

    auto emit = [&](Severity sev, const char *code, const Span &span, std::string msg, int r, int c) {
        diags.push_back(Diagnostic{sev, code, span, std::move(msg), r, c});
    };

    for (int r = 1; r <= num_rows; r++) {
        for (int c = 1; c <= num_cols; c++) {
            const Cell &cell = ast.rows[r - 1][c - 1];

            bool cell_on_left_edge = false;  // one E001 per entry
            if (c == 1 && is_leftward(cell.body)) {
                cell_on_left_edge = true;
                emit(Severity::Error, E001_LEFT_EDGE, cell.body_span,
                     "'" + element_name(cell.body) +
                         "' in the leftmost column has no previous column to connect to",
                     r, c);
            }

            if (const auto *ctrl = std::get_if<Ctrl>(&cell.body)) {
                if (ctrl->offset == 0) {
                    emit(Severity::Error, E007_BAD_OFFSET_ARG, cell.body_span,
                         "control offset must be nonzero", r, c);
                } else if (r + ctrl->offset < 1 || r + ctrl->offset > num_rows) {
                    emit(Severity::Error, E002_OFFSET_BOUNDS, cell.body_span,
                         "control connects " + std::to_string(ctrl->offset) +
                             " rows away, outside the circuit",
                         r, c);
                }
            }

            const MultiGateTop *mg = std::get_if<MultiGateTop>(&cell.body);
            const MultiMeasureTop *mm = std::get_if<MultiMeasureTop>(&cell.body);
            if (mg || mm) {
                int depth = mg ? mg->depth : mm->depth;
                if (depth < 1) {
                    emit(Severity::Error, E007_BAD_OFFSET_ARG, cell.body_span,
                         "multigate depth must be at least 1", r, c);
                } else if (r + depth > num_rows) {
                    emit(Severity::Error, E005_DEPTH_BOUNDS, cell.body_span,
                         "multigate depth " + std::to_string(depth) + " extends past the last row", r, c);
                }
            }

            if (const auto *ghost = std::get_if<Ghost>(&cell.body)) {
                const LabelExpr *covering = nullptr;
                for (int r0 = 1; r0 < r; r0++) {
                    const Cell &above = ast.rows[r0 - 1][c - 1];
                    int depth = 0;
                    const LabelExpr *label = nullptr;
                    if (const auto *top = std::get_if<MultiGateTop>(&above.body)) {
                        depth = top->depth;
                        label = &top->label;
                    } else if (const auto *mtop = std::get_if<MultiMeasureTop>(&above.body)) {
                        depth = mtop->depth;
                        label = &mtop->label;
                    }
                    if (label && r0 + depth >= r) {
                        covering = label;
                    }
                }
                if (!covering) {
                    emit(Severity::Warning, W001_ORPHAN_GHOST, cell.body_span,
                         "\\ghost has no \\multigate covering this row", r, c);
                } else {
                    double ghost_width = measure_label(ghost->label, metrics).width;
                    double gate_width = measure_label(*covering, metrics).width;
                    if (std::abs(ghost_width - gate_width) > 1e-9) {
                        emit(Severity::Warning, W003_GHOST_WIDTH, cell.body_span,
                             "\\ghost label width differs from its \\multigate label", r, c);
                    }
                }
            }

            for (const WireDecoration &dec : cell.decorations) {
                if (dec.kind == WireKind::Horizontal) {
                    if (dec.offset >= 0) {
                        emit(Severity::Error, E007_BAD_OFFSET_ARG, dec.span,
                             "horizontal wires connect leftward; offset must be negative", r, c);
                    } else if (c == 1) {
                        if (!cell_on_left_edge) {
                            cell_on_left_edge = true;
                            emit(Severity::Error, E001_LEFT_EDGE, dec.span,
                                 "wire in the leftmost column has no previous column to connect to", r,
                                 c);
                        }
                    } else if (c + dec.offset < 1) {
                        emit(Severity::Error, E002_OFFSET_BOUNDS, dec.span,
                             "wire connects " + std::to_string(-dec.offset) +
                                 " columns left, outside the circuit",
                             r, c);
                    }
                } else {
                    if (dec.offset == 0) {
                        emit(Severity::Error, E007_BAD_OFFSET_ARG, dec.span,
                             "vertical wire offset must be nonzero", r, c);
                    } else if (r + dec.offset < 1 || r + dec.offset > num_rows) {
                        emit(Severity::Error, E002_OFFSET_BOUNDS, dec.span,
                             "vertical wire connects " + std::to_string(dec.offset) +
                                 " rows away, outside the circuit",
                             r, c);
                    }
                }
            }
        }
    }

    for (const GateGroup &group : ast.groups) {
        if (group.r1 < 1 || group.c1 < 1 || group.r2 > num_rows || group.c2 > num_cols) {
            emit(Severity::Warning, W002_GROUP_BOUNDS, group.span,
                 "\\gategroup region is out of bounds; dropped", 0, 0);
        }
    }

    sort_diagnostics(diags);
    return diags;
}

}  // namespace qcirc
