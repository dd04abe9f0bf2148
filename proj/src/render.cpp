#include "qcirc/render.hpp"

#include <algorithm>
#include <cmath>

#include "label_runs.hpp"

namespace qcirc {

namespace {

constexpr double DEG = 3.14159265358979323846 / 180.0;

struct Renderer {
    const CircuitAst &ast;
    const LayoutGrid &layout;
    const StyleTable &style;
    const RenderOptions &options;
    const FontMetrics &metrics = default_metrics();
    ShapeList shapes;

    double cx(int c) const {
        return layout.col_center[c - 1];
    }
    double cy(int r) const {
        return layout.row_center[r - 1];
    }

    void add(int layer, std::string cls, auto geom) {
        shapes.push_back(Shape{layer, std::move(cls), std::move(geom)});
    }

    // ---- text -----------------------------------------------------------

    TextShape runs_at(const detail::LabelBox &box, double left_x, double baseline_y) const {
        TextShape text;
        for (const auto &run : box.runs) {
            TextRun out;
            out.pos = Point{left_x + run.x, baseline_y + run.dy};
            out.size = run.scale;
            out.font = run.font;
            out.text = run.text;
            out.width = run.width;
            out.ascent = metrics.cap_height * run.scale;
            out.descent = metrics.descender * run.scale;
            text.runs.push_back(std::move(out));
        }
        return text;
    }

    void add_centered_label(const LabelExpr &label, double center_x, double center_y) {
        auto box = detail::layout_label(label, metrics, true);
        if (box.runs.empty()) {
            return;
        }
        add(LAYER_TEXT, "",
            runs_at(box, center_x - box.width / 2.0, center_y + metrics.axis_height));
    }

    // ---- wires ----------------------------------------------------------

    void add_segment(const Segment &seg) {
        if (!seg.classical) {
            add(LAYER_WIRES, "qw", LineShape{seg.p1, seg.p2});
            return;
        }
        double g = style.classical_gap / 2.0;
        double dx = seg.vertical ? g : 0.0;
        double dy = seg.vertical ? 0.0 : g;
        PathShape path;
        path.cmds.push_back({PathCmd::Op::Move, Point{seg.p1.x - dx, seg.p1.y - dy}});
        path.cmds.push_back({PathCmd::Op::Line, Point{seg.p2.x - dx, seg.p2.y - dy}});
        path.cmds.push_back({PathCmd::Op::Move, Point{seg.p1.x + dx, seg.p1.y + dy}});
        path.cmds.push_back({PathCmd::Op::Line, Point{seg.p2.x + dx, seg.p2.y + dy}});
        add(LAYER_WIRES, "cw", std::move(path));
    }

    // ---- boxed elements ---------------------------------------------------

    // Box around a label centered on (x, y); vertical bounds may span rows.
    struct BoxRect {
        double x0, y0, x1, y1;
    };

    BoxRect gate_box(const LabelExpr &label, int r, int c, int depth = 0) const {
        Extent e = measure_label(label, metrics);
        double half_w = e.width / 2.0 + style.gate_pad_x;
        double top = cy(r) - e.above - style.gate_pad_y;
        double bottom = cy(r + depth) + e.below + style.gate_pad_y;
        return BoxRect{cx(c) - half_w, top, cx(c) + half_w, bottom};
    }

    void add_gate(const LabelExpr &label, int r, int c, int depth, const std::string &cls) {
        BoxRect b = gate_box(label, r, c, depth);
        add(LAYER_BOXES, cls,
            RectShape{Point{b.x0, b.y0}, b.x1 - b.x0, b.y1 - b.y0, true, true});
        add_centered_label(label, cx(c), (b.y0 + b.y1) / 2.0);
    }

    void add_measure_d(const LabelExpr &label, int r, int c, int depth) {
        BoxRect b = gate_box(label, r, c, depth);
        double radius = (b.y1 - b.y0) / 2.0;
        double flat_x = std::max(b.x0, b.x1 - radius);
        PathShape path;
        path.cmds.push_back({PathCmd::Op::Move, Point{b.x0, b.y0}});
        path.cmds.push_back({PathCmd::Op::Line, Point{flat_x, b.y0}});
        PathCmd arc{PathCmd::Op::Arc, Point{flat_x, b.y1}};
        arc.rx = radius;
        arc.ry = radius;
        arc.sweep = 1;
        path.cmds.push_back(arc);
        path.cmds.push_back({PathCmd::Op::Line, Point{b.x0, b.y1}});
        path.closed = true;
        path.filled = true;
        add(LAYER_BOXES, "measure", std::move(path));
        add_centered_label(label, cx(c), (b.y0 + b.y1) / 2.0);
    }

    void add_measure_tab(const LabelExpr &label, int r, int c) {
        BoxRect b = gate_box(label, r, c);
        double t = std::min(style.tab_size, (b.y1 - b.y0) / 2.0);
        PathShape path;
        path.cmds.push_back({PathCmd::Op::Move, Point{b.x0, b.y0}});
        path.cmds.push_back({PathCmd::Op::Line, Point{b.x1 - t, b.y0}});
        path.cmds.push_back({PathCmd::Op::Line, Point{b.x1, b.y0 + t}});
        path.cmds.push_back({PathCmd::Op::Line, Point{b.x1, b.y1}});
        path.cmds.push_back({PathCmd::Op::Line, Point{b.x0, b.y1}});
        path.closed = true;
        path.filled = true;
        add(LAYER_BOXES, "measure", std::move(path));

        PathShape fold;
        fold.cmds.push_back({PathCmd::Op::Move, Point{b.x1 - t, b.y0}});
        fold.cmds.push_back({PathCmd::Op::Line, Point{b.x1 - t, b.y0 + t}});
        fold.cmds.push_back({PathCmd::Op::Line, Point{b.x1, b.y0 + t}});
        add(LAYER_GLYPHS, "measure-fold", std::move(fold));
        add_centered_label(label, cx(c), (b.y0 + b.y1) / 2.0);
    }

    void add_meter(int r, int c) {
        double x = cx(c);
        double y = cy(r);
        double w = style.meter_width;
        double h = style.meter_height;
        add(LAYER_BOXES, "meter",
            RectShape{Point{x - w / 2.0, y - h / 2.0}, w, h, true, true});

        double radius = style.meter_arc_radius;
        double arc_cy = y + h * 0.28;
        double half_span = style.meter_arc_span_deg / 2.0;
        double a1 = (90.0 + half_span) * DEG;
        double a2 = (90.0 - half_span) * DEG;
        PathShape dial;
        dial.cmds.push_back(
            {PathCmd::Op::Move, Point{x + radius * std::cos(a1), arc_cy - radius * std::sin(a1)}});
        PathCmd arc{PathCmd::Op::Arc, Point{x + radius * std::cos(a2), arc_cy - radius * std::sin(a2)}};
        arc.rx = radius;
        arc.ry = radius;
        arc.sweep = 1;
        dial.cmds.push_back(arc);
        double na = style.meter_needle_deg * DEG;
        double len = radius * style.meter_needle_scale;
        dial.cmds.push_back({PathCmd::Op::Move, Point{x, arc_cy}});
        dial.cmds.push_back({PathCmd::Op::Line, Point{x + len * std::cos(na), arc_cy - len * std::sin(na)}});
        add(LAYER_GLYPHS, "meter-dial", std::move(dial));
    }

    // ---- glyph elements ---------------------------------------------------

    void add_control(bool open, int r, int c) {
        add(LAYER_GLYPHS, open ? "ctrlo" : "ctrl",
            CircleShape{Point{cx(c), cy(r)}, style.ctrl_radius, !open});
    }

    void add_targ(int r, int c) {
        double x = cx(c);
        double y = cy(r);
        double radius = style.targ_radius;
        PathShape path;
        path.cmds.push_back({PathCmd::Op::Move, Point{x - radius, y}});
        PathCmd half1{PathCmd::Op::Arc, Point{x + radius, y}};
        half1.rx = half1.ry = radius;
        half1.large_arc = 1;
        PathCmd half2{PathCmd::Op::Arc, Point{x - radius, y}};
        half2.rx = half2.ry = radius;
        half2.large_arc = 1;
        path.cmds.push_back(half1);
        path.cmds.push_back(half2);
        // the cross reaches the rim
        path.cmds.push_back({PathCmd::Op::Move, Point{x - radius, y}});
        path.cmds.push_back({PathCmd::Op::Line, Point{x + radius, y}});
        path.cmds.push_back({PathCmd::Op::Move, Point{x, y - radius}});
        path.cmds.push_back({PathCmd::Op::Line, Point{x, y + radius}});
        add(LAYER_GLYPHS, "targ", std::move(path));
    }

    void add_swap(int r, int c) {
        double x = cx(c);
        double y = cy(r);
        double s = style.swap_half;
        PathShape path;
        path.cmds.push_back({PathCmd::Op::Move, Point{x - s, y - s}});
        path.cmds.push_back({PathCmd::Op::Line, Point{x + s, y + s}});
        path.cmds.push_back({PathCmd::Op::Move, Point{x + s, y - s}});
        path.cmds.push_back({PathCmd::Op::Line, Point{x - s, y + s}});
        add(LAYER_GLYPHS, "swap", std::move(path));
    }

    // ---- sticks and labels ------------------------------------------------

    void add_stick(const Stick &stick, int r, int c) {
        auto box = detail::layout_label(stick.label, metrics, true);
        if (box.runs.empty()) {
            return;
        }
        double x = cx(c);
        double y = cy(r);
        double gap = style.stick_gap;
        double left_x = 0.0;
        double baseline = 0.0;
        switch (stick.dir) {
            case StickDir::Left:
                left_x = x - gap - box.width;
                baseline = y + metrics.axis_height;
                break;
            case StickDir::Right:
                left_x = x + gap;
                baseline = y + metrics.axis_height;
                break;
            case StickDir::Up:
                left_x = x - box.width / 2.0;
                baseline = y - gap - box.descent;
                break;
            case StickDir::Down:
                left_x = x - box.width / 2.0;
                baseline = y + gap + box.ascent;
                break;
        }
        add(LAYER_TEXT, "stick", runs_at(box, left_x, baseline));
    }

    // ---- group overlays ---------------------------------------------------

    struct Box {
        double x0 = 0, y0 = 0, x1 = 0, y1 = 0;
    };

    Box region_box(const GateGroup &group) const {
        Box box{1e30, 1e30, -1e30, -1e30};
        auto include = [&](int r, int c) {
            const Extent &e = layout.sized.layout.at(r - 1, c - 1);
            box.x0 = std::min(box.x0, cx(c) - e.width / 2.0);
            box.x1 = std::max(box.x1, cx(c) + e.width / 2.0);
            box.y0 = std::min(box.y0, cy(r) - e.above);
            box.y1 = std::max(box.y1, cy(r) + e.below);
        };
        if (options.corner_only_groups) {
            include(group.r1, group.c1);
            include(group.r1, group.c2);
            include(group.r2, group.c1);
            include(group.r2, group.c2);
        } else {
            for (int r = group.r1; r <= group.r2; r++) {
                for (int c = group.c1; c <= group.c2; c++) {
                    include(r, c);
                }
            }
        }
        double inflate = group.pad.to_em() / 2.0;
        box.x0 -= inflate;
        box.y0 -= inflate;
        box.x1 += inflate;
        box.y1 += inflate;
        return box;
    }

    void add_brace(Point a, Point b, Point normal, bool curly) {
        double d = style.brace_depth;
        Point u{b.x - a.x, b.y - a.y};
        double len = std::hypot(u.x, u.y);
        if (len <= 0.0) {
            return;
        }
        u.x /= len;
        u.y /= len;
        PathShape path;
        if (!curly) {
            path.cmds.push_back({PathCmd::Op::Move, a});
            PathCmd c1{PathCmd::Op::Cubic, b};
            c1.c1 = Point{a.x + normal.x * 1.33 * d, a.y + normal.y * 1.33 * d};
            c1.c2 = Point{b.x + normal.x * 1.33 * d, b.y + normal.y * 1.33 * d};
            path.cmds.push_back(c1);
        } else {
            Point mid{(a.x + b.x) / 2.0, (a.y + b.y) / 2.0};
            Point tip{mid.x + normal.x * 1.8 * d, mid.y + normal.y * 1.8 * d};
            double s = std::min(len / 4.0, 2.0 * d);
            path.cmds.push_back({PathCmd::Op::Move, a});
            PathCmd c1{PathCmd::Op::Cubic, tip};
            c1.c1 = Point{a.x + normal.x * 1.33 * d, a.y + normal.y * 1.33 * d};
            c1.c2 = Point{tip.x - u.x * s, tip.y - u.y * s};
            path.cmds.push_back(c1);
            PathCmd c2{PathCmd::Op::Cubic, b};
            c2.c1 = Point{tip.x + u.x * s, tip.y + u.y * s};
            c2.c2 = Point{b.x + normal.x * 1.33 * d, b.y + normal.y * 1.33 * d};
            path.cmds.push_back(c2);
        }
        add(LAYER_GROUPS, "group", std::move(path));
    }

    void add_group(const GateGroup &group) {
        int rows = static_cast<int>(ast.num_rows());
        int cols = static_cast<int>(ast.num_cols());
        if (group.r1 < 1 || group.c1 < 1 || group.r2 > rows || group.c2 > cols) {
            return;  // W002 already reported
        }
        Box b = region_box(group);
        switch (group.style) {
            case GroupStyle::DashedBox:
            case GroupStyle::DottedBox: {
                RectShape rect{Point{b.x0, b.y0}, b.x1 - b.x0, b.y1 - b.y0, false, true};
                rect.dash = group.style == GroupStyle::DashedBox ? DashPattern::Dashed
                                                                 : DashPattern::Dotted;
                add(LAYER_GROUPS, "group", rect);
                break;
            }
            case GroupStyle::BraceBottom:
                add_brace(Point{b.x0, b.y1}, Point{b.x1, b.y1}, Point{0, 1}, true);
                break;
            case GroupStyle::BraceTop:
                add_brace(Point{b.x0, b.y0}, Point{b.x1, b.y0}, Point{0, -1}, true);
                break;
            case GroupStyle::BraceLeft:
                add_brace(Point{b.x0, b.y0}, Point{b.x0, b.y1}, Point{-1, 0}, true);
                break;
            case GroupStyle::BraceRight:
                add_brace(Point{b.x1, b.y0}, Point{b.x1, b.y1}, Point{1, 0}, true);
                break;
            case GroupStyle::ParenBottom:
                add_brace(Point{b.x0, b.y1}, Point{b.x1, b.y1}, Point{0, 1}, false);
                break;
            case GroupStyle::ParenTop:
                add_brace(Point{b.x0, b.y0}, Point{b.x1, b.y0}, Point{0, -1}, false);
                break;
            case GroupStyle::ParenLeft:
                add_brace(Point{b.x0, b.y0}, Point{b.x0, b.y1}, Point{-1, 0}, false);
                break;
            case GroupStyle::ParenRight:
                add_brace(Point{b.x1, b.y0}, Point{b.x1, b.y1}, Point{1, 0}, false);
                break;
        }
    }

    // ---- driver -----------------------------------------------------------

    void add_cell(int r, int c) {
        const Cell &cell = ast.rows[r - 1][c - 1];
        struct Painter {
            Renderer &self;
            int r, c;

            void operator()(const Empty &) {}
            void operator()(const Gate &g) {
                self.add_gate(g.label, r, c, 0, "gate");
            }
            void operator()(const Targ &) {
                self.add_targ(r, c);
            }
            void operator()(const Swap &) {
                self.add_swap(r, c);
            }
            void operator()(const MultiGateTop &m) {
                self.add_gate(m.label, r, c, m.depth, "gate");
            }
            void operator()(const Ghost &) {}  // space only; the multigate draws
            void operator()(const Meter &) {
                self.add_meter(r, c);
            }
            void operator()(const Measure &m) {
                self.add_gate(m.label, r, c, 0, "measure");
            }
            void operator()(const MeasureTab &m) {
                self.add_measure_tab(m.label, r, c);
            }
            void operator()(const MeasureD &m) {
                self.add_measure_d(m.label, r, c, 0);
            }
            void operator()(const MultiMeasureTop &m) {
                if (m.style == MultiMeasureStyle::D) {
                    self.add_measure_d(m.label, r, c, m.depth);
                } else {
                    self.add_gate(m.label, r, c, m.depth, "measure");
                }
            }
            void operator()(const Ctrl &ctrl) {
                self.add_control(ctrl.open, r, c);
            }
            void operator()(const Control &ctrl) {
                self.add_control(ctrl.open, r, c);
            }
            void operator()(const Stick &s) {
                self.add_stick(s, r, c);
            }
            void operator()(const Push &) {}
            void operator()(const RawLabel &l) {
                self.add_centered_label(l.label, self.cx(c), self.cy(r));
            }
        };
        std::visit(Painter{*this, r, c}, cell.body);
    }

    ShapeList run(const ConnectorSet &connectors) {
        for (const Segment &seg : connectors.segments) {
            add_segment(seg);
        }
        for (int r = 1; r <= static_cast<int>(ast.num_rows()); r++) {
            for (int c = 1; c <= static_cast<int>(ast.num_cols()); c++) {
                add_cell(r, c);
            }
        }
        for (const GateGroup &group : ast.groups) {
            add_group(group);
        }
        std::stable_sort(shapes.begin(), shapes.end(), [](const Shape &a, const Shape &b) {
            return a.layer < b.layer;
        });
        return std::move(shapes);
    }
};

}  // namespace

ShapeList render_shapes(
    const CircuitAst &ast, const LayoutGrid &layout, const ConnectorSet &connectors,
    const StyleTable &style, const RenderOptions &options) {
    Renderer renderer{ast, layout, style, options};
    return renderer.run(connectors);
}

}  // namespace qcirc
